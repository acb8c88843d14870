#include "polytran/rational.hpp"

#include "polytran/errors.hpp"

#include <cstddef>

namespace polytran {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (ch < '0' || ch > '9') return false;
    }
    return true;
}

Int pow10(std::size_t exp) {
    Int value = 1;
    for (std::size_t i = 0; i < exp; ++i) value *= 10;
    return value;
}

[[noreturn]] void fail(std::string_view text) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    if (rest.empty()) fail(text);

    Rat value;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        std::string_view num = rest.substr(0, slash);
        std::string_view den = rest.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) fail(text);
        Int d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        value = Rat(Int{std::string(num)}, d);
    } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
        std::string_view whole = rest.substr(0, dot);
        std::string_view frac = rest.substr(dot + 1);
        if (whole.empty() && frac.empty()) fail(text);
        if (!whole.empty() && !all_digits(whole)) fail(text);
        if (!frac.empty() && !all_digits(frac)) fail(text);
        Int scaled = whole.empty() ? Int{0} : Int{std::string(whole)};
        scaled *= pow10(frac.size());
        if (!frac.empty()) scaled += Int{std::string(frac)};
        value = Rat(scaled, pow10(frac.size()));
    } else {
        if (!all_digits(rest)) fail(text);
        value = Rat(Int{std::string(rest)});
    }
    return negative ? Rat(-value) : value;
}

std::string to_string(const Rat& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

std::string to_decimal_string(const Rat& value, int digits) {
    if (digits < 0) digits = 0;
    Int num = numerator(value);
    Int den = denominator(value);
    bool negative = num < 0;
    if (negative) num = -num;

    Int scale = pow10(static_cast<std::size_t>(digits));
    Int scaled = num * scale;
    Int q = scaled / den;
    Int r = scaled % den;
    if (2 * r >= den) ++q;  // round half away from zero

    std::string body = q.str();
    std::string out;
    if (digits == 0) {
        out = body;
    } else {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        out = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
    }
    if (negative && out.find_first_not_of("0.") != std::string::npos) out.insert(0, 1, '-');
    return out;
}

}  // namespace polytran
