#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace polytran {

// Every quantity in the library is an exact rational. Rat is kept in lowest
// terms by the backend, so equality and order are decidable and "fractional"
// is a well-defined predicate. There is no floating-point fast path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parses "3", "-3", "1/2", "-7/4", "0.5", ".5" or "5.". Decimal strings are
/// converted exactly (never through floating point). Throws ParseError,
/// quoting the offending token.
Rat parse_rational(std::string_view text);

/// Canonical form: "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rat& value);

/// Decimal rendering with `digits` fraction digits, rounded half away from
/// zero. For human-facing output only; inexact by nature.
std::string to_decimal_string(const Rat& value, int digits);

inline bool is_integer(const Rat& value) { return denominator(value) == 1; }

/// Fractional in the polytope sense: strictly between 0 and 1.
inline bool is_fractional(const Rat& value) { return value > 0 && value < 1; }

}  // namespace polytran
