#pragma once

#include "polytran/bounds_spec.hpp"
#include "polytran/decompose.hpp"
#include "polytran/membership.hpp"
#include "polytran/perturbation.hpp"
#include "polytran/transport_matrix.hpp"

#include <json.hpp>

#include <string>

namespace polytran {

// Rational values serialize as canonical strings ("1/2", "3"); integral JSON
// numbers are accepted on input, anything inexact is rejected. All documents
// round-trip exactly.

BoundsSpec spec_from_json(const nlohmann::json& doc);
nlohmann::json spec_to_json(const BoundsSpec& spec);

TransportMatrix matrix_from_json(const nlohmann::json& doc);
nlohmann::json matrix_to_json(const TransportMatrix& matrix);

/// CSV: one row per line, comma-separated rational tokens.
TransportMatrix matrix_from_csv(const std::string& text);
std::string matrix_to_csv(const TransportMatrix& matrix);

Decomposition decomposition_from_json(const nlohmann::json& doc);
nlohmann::json decomposition_to_json(const Decomposition& certificate);

nlohmann::json membership_report_to_json(const MembershipReport& report);
nlohmann::json structure_to_json(const AlternatingStructure& s);
nlohmann::json plan_to_json(const PerturbationPlan& plan);

/// Reads a file, or stdin when path is "-".
std::string read_input(const std::string& path);

/// Loads a matrix from a path: JSON when the content starts with '[' or the
/// extension says so, CSV otherwise.
TransportMatrix load_matrix(const std::string& path);
BoundsSpec load_spec(const std::string& path);
Decomposition load_decomposition(const std::string& path);

/// Replaces every rational-string leaf with a decimal rendering; used by the
/// command line's approximate output mode.
nlohmann::json render_decimals(const nlohmann::json& doc, int digits);

}  // namespace polytran
