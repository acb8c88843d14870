#include "polytran/io.hpp"

#include "polytran/errors.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace polytran {

using nlohmann::json;

namespace {

Rat rational_from_json(const json& value, const std::string& where) {
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const ParseError& err) {
            throw ParseError(where + ": " + err.what());
        }
    }
    if (value.is_number_integer()) return Rat(value.get<long long>());
    if (value.is_number_unsigned()) return Rat(static_cast<long long>(value.get<unsigned long long>()));
    if (value.is_number_float()) {
        throw ParseError(where + ": non-integral JSON numbers are inexact; use a rational string");
    }
    throw ParseError(where + ": expected a rational string or integer, got " + value.dump());
}

long long integer_from_json(const json& value, const std::string& where) {
    if (!value.is_number_integer() && !value.is_number_unsigned()) {
        throw ParseError(where + ": expected an integer, got " + value.dump());
    }
    return value.get<long long>();
}

std::vector<long long> integer_vector(const json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end() || !it->is_array()) {
        throw ParseError(std::string("spec field '") + key + "' must be an integer array");
    }
    std::vector<long long> values;
    values.reserve(it->size());
    for (std::size_t p = 0; p < it->size(); ++p) {
        values.push_back(integer_from_json((*it)[p], std::string(key) + "[" + std::to_string(p) + "]"));
    }
    return values;
}

const char* side_name(BoundSide side) { return side == BoundSide::lower ? "lower" : "upper"; }

json line_violations_to_json(const std::vector<LineViolation>& violations) {
    json out = json::array();
    for (const auto& v : violations) {
        out.push_back({{"index", v.index}, {"sum", to_string(v.sum)}, {"side", side_name(v.side)}, {"bound", v.bound}});
    }
    return out;
}

}  // namespace

BoundsSpec spec_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("spec document must be a JSON object");
    for (const char* key : {"n", "m", "r", "R", "c", "C"}) {
        if (!doc.contains(key)) throw ParseError(std::string("spec is missing field '") + key + "'");
    }
    const long long n = integer_from_json(doc.at("n"), "n");
    const long long m = integer_from_json(doc.at("m"), "m");
    std::optional<long long> total;
    if (doc.contains("k") && !doc.at("k").is_null()) total = integer_from_json(doc.at("k"), "k");
    return BoundsSpec(static_cast<int>(n), static_cast<int>(m), integer_vector(doc, "r"), integer_vector(doc, "R"),
                      integer_vector(doc, "c"), integer_vector(doc, "C"), total);
}

json spec_to_json(const BoundsSpec& spec) {
    json doc{{"n", spec.n()},      {"m", spec.m()},      {"r", spec.row_mins()},
             {"R", spec.row_maxs()}, {"c", spec.col_mins()}, {"C", spec.col_maxs()}};
    doc["k"] = spec.total() ? json(*spec.total()) : json(nullptr);
    return doc;
}

TransportMatrix matrix_from_json(const json& doc) {
    if (!doc.is_array() || doc.empty()) {
        throw ParseError("matrix document must be a non-empty array of rows");
    }
    std::vector<std::vector<Rat>> rows;
    rows.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json& row = doc[i];
        if (!row.is_array() || row.empty()) {
            throw ParseError("matrix row " + std::to_string(i) + " must be a non-empty array");
        }
        std::vector<Rat> values;
        values.reserve(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            values.push_back(rational_from_json(row[j], "cell (" + std::to_string(i) + "," + std::to_string(j) + ")"));
        }
        rows.push_back(std::move(values));
    }
    try {
        return TransportMatrix(std::move(rows));
    } catch (const DimensionMismatch& err) {
        throw ParseError(std::string("matrix document: ") + err.what());
    }
}

json matrix_to_json(const TransportMatrix& matrix) {
    json rows = json::array();
    for (int i = 0; i < matrix.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < matrix.cols(); ++j) row.push_back(to_string(matrix.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

TransportMatrix matrix_from_csv(const std::string& text) {
    std::vector<std::vector<Rat>> rows;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<Rat> values;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            const auto first = field.find_first_not_of(" \t");
            const auto last = field.find_last_not_of(" \t");
            if (first == std::string::npos) {
                throw ParseError("line " + std::to_string(line_no) + ": empty field");
            }
            try {
                values.push_back(parse_rational(field.substr(first, last - first + 1)));
            } catch (const ParseError& err) {
                throw ParseError("line " + std::to_string(line_no) + ": " + err.what());
            }
        }
        if (!rows.empty() && values.size() != rows.front().size()) {
            throw ParseError("line " + std::to_string(line_no) + ": row has " + std::to_string(values.size()) +
                             " entries, expected " + std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(values));
    }
    if (rows.empty()) throw ParseError("CSV input holds no rows");
    return TransportMatrix(std::move(rows));
}

std::string matrix_to_csv(const TransportMatrix& matrix) {
    std::string out;
    for (int i = 0; i < matrix.rows(); ++i) {
        for (int j = 0; j < matrix.cols(); ++j) {
            if (j > 0) out += ',';
            out += to_string(matrix.at(i, j));
        }
        out += '\n';
    }
    return out;
}

Decomposition decomposition_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("terms") || !doc.at("terms").is_array()) {
        throw ParseError("certificate document must be an object with a 'terms' array");
    }
    Decomposition certificate;
    for (std::size_t t = 0; t < doc.at("terms").size(); ++t) {
        const json& term = doc.at("terms")[t];
        if (!term.is_object() || !term.contains("weight") || !term.contains("vertex")) {
            throw ParseError("certificate term " + std::to_string(t) + " needs 'weight' and 'vertex'");
        }
        certificate.terms.push_back({rational_from_json(term.at("weight"), "term " + std::to_string(t) + " weight"),
                                     matrix_from_json(term.at("vertex"))});
    }
    return certificate;
}

json decomposition_to_json(const Decomposition& certificate) {
    json terms = json::array();
    for (const auto& term : certificate.terms) {
        terms.push_back({{"weight", to_string(term.weight)}, {"vertex", matrix_to_json(term.vertex)}});
    }
    return json{{"terms", std::move(terms)}};
}

json membership_report_to_json(const MembershipReport& report) {
    json entries = json::array();
    for (const auto& v : report.entry_violations) {
        entries.push_back({{"row", v.row}, {"col", v.col}, {"value", to_string(v.value)}});
    }
    json doc{{"is_member", report.is_member()},
             {"entry_violations", std::move(entries)},
             {"row_violations", line_violations_to_json(report.row_violations)},
             {"col_violations", line_violations_to_json(report.col_violations)}};
    doc["sigma_violation"] = report.sigma_violation
                                 ? json{{"sigma", to_string(report.sigma_violation->sigma)},
                                        {"k", report.sigma_violation->target}}
                                 : json(nullptr);
    return doc;
}

json structure_to_json(const AlternatingStructure& s) {
    json cells = json::array();
    for (const Cell& c : s.cells) cells.push_back({c.row, c.col});
    json doc{{"kind", s.kind == StructureKind::even_cycle ? "even_cycle" : "odd_path"},
             {"closed", s.closed()},
             {"cells", std::move(cells)}};
    doc["start_line"] = s.start_line ? json{{"orientation", s.start_line->kind == LineKind::row ? "row" : "column"},
                                            {"index", s.start_line->index}}
                                     : json(nullptr);
    return doc;
}

json plan_to_json(const PerturbationPlan& plan) {
    json support = json::array();
    for (const auto& [cell, coeff] : plan.support) {
        support.push_back({{"cell", {cell.row, cell.col}}, {"coefficient", to_string(coeff)}});
    }
    return json{{"support", std::move(support)},
                {"eps_plus", to_string(plan.eps_plus)},
                {"eps_minus", to_string(plan.eps_minus)},
                {"sigma_delta_per_eps", plan.sigma_delta_per_eps}};
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

namespace {

json parse_json_text(const std::string& text, const std::string& path) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError(path + ": invalid JSON");
    return doc;
}

}  // namespace

TransportMatrix load_matrix(const std::string& path) {
    const std::string text = read_input(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError(path + ": empty input");
    const bool looks_json = text[first] == '[' || text[first] == '{';
    const bool named_csv = path.size() > 4 && path.substr(path.size() - 4) == ".csv";
    if (!named_csv && looks_json) {
        try {
            return matrix_from_json(parse_json_text(text, path));
        } catch (const ParseError& err) {
            throw ParseError(path + ": " + err.what());
        }
    }
    try {
        return matrix_from_csv(text);
    } catch (const ParseError& err) {
        throw ParseError(path + ": " + err.what());
    }
}

BoundsSpec load_spec(const std::string& path) {
    try {
        return spec_from_json(parse_json_text(read_input(path), path));
    } catch (const ParseError& err) {
        throw ParseError(path + ": " + err.what());
    }
}

Decomposition load_decomposition(const std::string& path) {
    try {
        return decomposition_from_json(parse_json_text(read_input(path), path));
    } catch (const ParseError& err) {
        throw ParseError(path + ": " + err.what());
    }
}

json render_decimals(const json& doc, int digits) {
    if (doc.is_string()) {
        try {
            return to_decimal_string(parse_rational(doc.get<std::string>()), digits);
        } catch (const ParseError&) {
            return doc;
        }
    }
    if (doc.is_array()) {
        json out = json::array();
        for (const auto& item : doc) out.push_back(render_decimals(item, digits));
        return out;
    }
    if (doc.is_object()) {
        json out = json::object();
        for (const auto& [key, value] : doc.items()) out[key] = render_decimals(value, digits);
        return out;
    }
    return doc;
}

}  // namespace polytran
