#include "polytran/decompose.hpp"
#include "polytran/errors.hpp"
#include "polytran/flow.hpp"
#include "polytran/io.hpp"
#include "polytran/membership.hpp"
#include "polytran/oracle.hpp"
#include "polytran/perturbation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using nlohmann::json;
using namespace polytran;

enum class Status { ok, violation, infeasible, error };

const char* status_name(Status status) {
    switch (status) {
        case Status::ok: return "ok";
        case Status::violation: return "violation";
        case Status::infeasible: return "infeasible";
        case Status::error: return "error";
    }
    return "error";
}

int status_exit_code(Status status) {
    switch (status) {
        case Status::ok: return 0;
        case Status::violation:
        case Status::infeasible: return 1;
        case Status::error: return 2;
    }
    return 2;
}

struct CommandResult {
    Status status = Status::ok;
    json payload = json::object();
    std::vector<std::string> diagnostics;
};

struct OutputOptions {
    bool pretty = false;
    int decimal_digits = -1;  // <0 keeps exact rational strings
};

int emit(const CommandResult& result, const OutputOptions& output) {
    json envelope{{"status", status_name(result.status)},
                  {"payload", result.payload},
                  {"diagnostics", result.diagnostics}};
    if (output.decimal_digits >= 0) {
        envelope["payload"] = render_decimals(envelope["payload"], output.decimal_digits);
        envelope["inexact"] = true;
    }
    std::cout << (output.pretty ? envelope.dump(2) : envelope.dump()) << "\n";
    return status_exit_code(result.status);
}

int enumeration_cap(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("POLYTRAN_CAP")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw ParseError("POLYTRAN_CAP must be an integer, got '" + std::string(env) + "'");
        }
    }
    return kDefaultEnumerationCap;
}

CommandResult run_check(const BoundsSpec& spec, const TransportMatrix& matrix) {
    const auto report = check_membership(matrix, spec);
    CommandResult result;
    result.status = report.is_member() ? Status::ok : Status::violation;
    result.payload = membership_report_to_json(report);
    if (!report.is_member()) result.diagnostics.push_back("matrix violates the instance constraints");
    return result;
}

CommandResult run_feasible(const BoundsSpec& spec) {
    CommandResult result;
    const bool feasible = is_feasible(spec);
    result.status = feasible ? Status::ok : Status::infeasible;
    result.payload = json{{"feasible", feasible}};
    if (!feasible) result.diagnostics.push_back("the instance admits no member");
    return result;
}

CommandResult run_extreme(const BoundsSpec& spec, const TransportMatrix& matrix) {
    CommandResult result;
    result.payload = json{{"extreme", is_extreme(matrix, spec)}};
    return result;
}

CommandResult run_decompose(const BoundsSpec& spec, const TransportMatrix& matrix, const std::string& out_path) {
    const auto certificate = decompose(matrix, spec);
    CommandResult result;
    result.payload = decomposition_to_json(certificate);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write '" + out_path + "'");
        out << result.payload.dump(2) << "\n";
    }
    return result;
}

CommandResult run_verify(const BoundsSpec& spec, const TransportMatrix& matrix, const Decomposition& certificate) {
    const auto verdict = verify_certificate(matrix, certificate, spec);
    CommandResult result;
    result.status = verdict.ok ? Status::ok : Status::violation;
    result.payload = json{{"valid", verdict.ok}};
    result.diagnostics = verdict.diagnostics;
    return result;
}

CommandResult run_solve(const BoundsSpec& spec, const TransportMatrix& cost) {
    const auto [assignment, objective] = solve_min_cost(cost, spec);
    CommandResult result;
    result.payload = json{{"objective", to_string(objective)}, {"matrix", matrix_to_json(assignment)}};
    return result;
}

CommandResult run_explain(const BoundsSpec& spec, const TransportMatrix& matrix) {
    if (!is_member(matrix, spec)) throw NotAMember("matrix is not a member of the polytope");
    const auto structure = find_structure(matrix, spec);
    const auto plan = spec.total() ? build_k_preserving_plan(matrix, spec, structure)
                                   : build_plan(matrix, spec, structure);
    CommandResult result;
    result.payload = json{{"structure", structure_to_json(structure)}, {"plan", plan_to_json(plan)}};
    return result;
}

// One matrix per line keeps huge vertex sets streamable.
int run_vertices(const BoundsSpec& spec, int cap, const OutputOptions& output) {
    const auto vs = enumerate_vertices(spec, cap);
    for (const auto& vertex : vs.vertices) {
        if (output.pretty) {
            for (int i = 0; i < vertex.rows(); ++i) {
                std::string line;
                for (int j = 0; j < vertex.cols(); ++j) {
                    if (j > 0) line += ' ';
                    line += to_string(vertex.at(i, j));
                }
                std::cout << line << "\n";
            }
            std::cout << "\n";
        } else {
            std::cout << matrix_to_json(vertex).dump() << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for bounded transportation polytopes: membership, feasibility, "
                 "extreme points, vertex decomposition, and min-cost assignment"};
    app.require_subcommand(1);

    OutputOptions output;
    app.add_flag("--pretty", output.pretty, "Human-readable output instead of compact JSON");
    app.add_option("--decimal", output.decimal_digits, "Render rationals as decimals with this many digits (inexact)")
        ->check(CLI::NonNegativeNumber);

    std::string spec_path, matrix_path, cert_path, cost_path, out_path;
    int cap_flag = 0;

    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("--spec", spec_path, "Instance JSON file")->required();
    };
    auto add_matrix = [&](CLI::App* cmd) {
        cmd->add_option("--matrix", matrix_path, "Matrix file (JSON or CSV, '-' for stdin)")->required();
    };

    auto* check_cmd = app.add_subcommand("check", "Test membership and report every violated constraint");
    add_spec(check_cmd);
    add_matrix(check_cmd);

    auto* feasible_cmd = app.add_subcommand("feasible", "Decide whether the instance has any member");
    add_spec(feasible_cmd);

    auto* extreme_cmd = app.add_subcommand("extreme", "Decide whether a member is an extreme point");
    add_spec(extreme_cmd);
    add_matrix(extreme_cmd);

    auto* decompose_cmd = app.add_subcommand("decompose", "Write a member as a convex combination of 0/1 vertices");
    add_spec(decompose_cmd);
    add_matrix(decompose_cmd);
    decompose_cmd->add_option("--out", out_path, "Also write the certificate JSON to this file");

    auto* verify_cmd = app.add_subcommand("verify", "Re-check a decomposition certificate from scratch");
    add_spec(verify_cmd);
    add_matrix(verify_cmd);
    verify_cmd->add_option("--cert", cert_path, "Certificate JSON file")->required();

    auto* vertices_cmd = app.add_subcommand("vertices", "Enumerate all 0/1 members, one JSON matrix per line");
    add_spec(vertices_cmd);
    vertices_cmd->add_option("--cap", cap_flag, "Cell cap for the exhaustive scan (env POLYTRAN_CAP)");

    auto* solve_cmd = app.add_subcommand("solve", "Minimize the transport cost; the optimum is an integral member");
    add_spec(solve_cmd);
    solve_cmd->add_option("--cost", cost_path, "Cost matrix file (JSON or CSV)")->required();

    auto* explain_cmd = app.add_subcommand("explain", "Show the alternating structure and perturbation plan found");
    add_spec(explain_cmd);
    add_matrix(explain_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        const BoundsSpec spec = load_spec(spec_path);
        if (vertices_cmd->parsed()) {
            return run_vertices(spec, enumeration_cap(cap_flag), output);
        }
        CommandResult result;
        if (check_cmd->parsed()) {
            result = run_check(spec, load_matrix(matrix_path));
        } else if (feasible_cmd->parsed()) {
            result = run_feasible(spec);
        } else if (extreme_cmd->parsed()) {
            result = run_extreme(spec, load_matrix(matrix_path));
        } else if (decompose_cmd->parsed()) {
            result = run_decompose(spec, load_matrix(matrix_path), out_path);
        } else if (verify_cmd->parsed()) {
            result = run_verify(spec, load_matrix(matrix_path), load_decomposition(cert_path));
        } else if (solve_cmd->parsed()) {
            result = run_solve(spec, load_matrix(cost_path));
        } else if (explain_cmd->parsed()) {
            result = run_explain(spec, load_matrix(matrix_path));
        }
        return emit(result, output);
    } catch (const NotAMember& err) {
        return emit({Status::violation, json::object(), {err.what()}}, output);
    } catch (const NoFractionalCell& err) {
        return emit({Status::violation, json::object(), {err.what()}}, output);
    } catch (const Infeasible& err) {
        return emit({Status::infeasible, json::object(), {err.what()}}, output);
    } catch (const Error& err) {
        return emit({Status::error, json::object(), {err.what()}}, output);
    } catch (const std::exception& err) {
        return emit({Status::error, json::object(), {err.what()}}, output);
    }
}
