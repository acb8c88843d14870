#include "polytran/decompose.hpp"

#include "polytran/errors.hpp"
#include "polytran/membership.hpp"
#include "polytran/perturbation.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace polytran {

namespace {

struct Splitter {
    const BoundsSpec& spec;
    DecomposeStats* stats;
    std::map<TransportMatrix, Decomposition> memo;

    Decomposition run(const TransportMatrix& matrix, int depth) {
        if (stats) stats->max_depth = std::max(stats->max_depth, depth);
        if (matrix.is_integral()) {
            Decomposition single;
            single.terms.push_back({Rat(1), matrix});
            return single;
        }
        if (auto cached = memo.find(matrix); cached != memo.end()) return cached->second;

        const AlternatingStructure structure = find_structure(matrix, spec);
        const PerturbationPlan plan = spec.total() ? build_k_preserving_plan(matrix, spec, structure)
                                                   : build_plan(matrix, spec, structure);
        const TransportMatrix up = apply_plan(matrix, plan, plan.eps_plus, +1);
        const TransportMatrix down = apply_plan(matrix, plan, plan.eps_minus, -1);
        if (spec.total() && (up.sigma() != *spec.total() || down.sigma() != *spec.total())) {
            throw InternalError("split does not preserve the total-sum target");
        }
        const int potential = fractional_potential(matrix);
        if (fractional_potential(up) >= potential || fractional_potential(down) >= potential) {
            throw InternalError("split does not reduce the fractional potential");
        }
        if (stats) ++stats->splits;

        // matrix = t * up + (1-t) * down with t chosen so the identity is exact.
        const Rat t = plan.eps_minus / (plan.eps_plus + plan.eps_minus);
        Decomposition up_part = run(up, depth + 1);
        Decomposition down_part = run(down, depth + 1);

        std::map<TransportMatrix, Rat> weights;
        for (const auto& term : up_part.terms) weights[term.vertex] += t * term.weight;
        for (const auto& term : down_part.terms) weights[term.vertex] += (1 - t) * term.weight;

        Decomposition merged;
        merged.terms.reserve(weights.size());
        for (auto& [vertex, weight] : weights) merged.terms.push_back({std::move(weight), vertex});
        memo.emplace(matrix, merged);
        return merged;
    }
};

}  // namespace

bool is_extreme(const TransportMatrix& matrix, const BoundsSpec& spec) {
    if (!is_member(matrix, spec)) {
        throw NotAMember("matrix is not a member of the polytope");
    }
    return matrix.is_integral();
}

Decomposition decompose(const TransportMatrix& matrix, const BoundsSpec& spec, DecomposeStats* stats) {
    if (!is_member(matrix, spec)) {
        throw NotAMember("matrix is not a member of the polytope");
    }
    Splitter splitter{spec, stats, {}};
    return splitter.run(matrix, 0);
}

VerifyResult verify_certificate(const TransportMatrix& matrix, const Decomposition& certificate,
                                const BoundsSpec& spec) {
    VerifyResult result;
    auto complain = [&](std::string text) { result.diagnostics.push_back(std::move(text)); };

    if (certificate.terms.empty()) {
        complain("certificate has no terms");
        return result;
    }

    Rat weight_sum = 0;
    for (std::size_t t = 0; t < certificate.terms.size(); ++t) {
        const auto& term = certificate.terms[t];
        weight_sum += term.weight;
        if (term.weight <= 0) {
            complain("term " + std::to_string(t) + " has non-positive weight " + to_string(term.weight));
        }
        if (term.vertex.rows() != spec.n() || term.vertex.cols() != spec.m()) {
            complain("term " + std::to_string(t) + " vertex is " + std::to_string(term.vertex.rows()) + "x" +
                     std::to_string(term.vertex.cols()) + ", spec expects " + std::to_string(spec.n()) + "x" +
                     std::to_string(spec.m()));
            continue;
        }
        if (!term.vertex.is_integral()) {
            complain("term " + std::to_string(t) + " vertex is not a 0/1 matrix");
        }
        if (!is_member(term.vertex, spec)) {
            complain("term " + std::to_string(t) + " vertex is not a member of the polytope");
        }
    }
    if (weight_sum != 1) complain("weights sum to " + to_string(weight_sum));

    std::map<TransportMatrix, std::size_t> seen;
    for (std::size_t t = 0; t < certificate.terms.size(); ++t) {
        auto [it, inserted] = seen.emplace(certificate.terms[t].vertex, t);
        if (!inserted) {
            complain("terms " + std::to_string(it->second) + " and " + std::to_string(t) +
                     " share the same vertex");
        }
    }

    bool shapes_ok = true;
    for (const auto& term : certificate.terms) {
        if (term.vertex.rows() != matrix.rows() || term.vertex.cols() != matrix.cols()) shapes_ok = false;
    }
    if (matrix.rows() != spec.n() || matrix.cols() != spec.m()) {
        complain("matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                 ", spec expects " + std::to_string(spec.n()) + "x" + std::to_string(spec.m()));
        shapes_ok = false;
    }
    if (shapes_ok) {
        TransportMatrix reconstructed(matrix.rows(), matrix.cols());
        for (const auto& term : certificate.terms) reconstructed = reconstructed + term.weight * term.vertex;
        if (!(reconstructed == matrix)) {
            for (int i = 0; i < matrix.rows(); ++i) {
                for (int j = 0; j < matrix.cols(); ++j) {
                    if (reconstructed.at(i, j) != matrix.at(i, j)) {
                        complain("reconstruction differs at cell (" + std::to_string(i) + "," + std::to_string(j) +
                                 "): expected " + to_string(matrix.at(i, j)) + ", got " +
                                 to_string(reconstructed.at(i, j)));
                    }
                }
            }
        }
    }

    result.ok = result.diagnostics.empty();
    return result;
}

}  // namespace polytran
