#pragma once

#include "polytran/bounds_spec.hpp"
#include "polytran/transport_matrix.hpp"

#include <string>
#include <vector>

namespace polytran {

struct DecompositionTerm {
    Rat weight;
    TransportMatrix vertex;
};

/// Convex-combination certificate: positive weights summing to one, distinct
/// 0/1 member matrices, weighted sum equal to the decomposed matrix exactly.
/// Terms are kept in lexicographic vertex order.
struct Decomposition {
    std::vector<DecompositionTerm> terms;
};

/// True iff the member matrix is an extreme point of the instance, which is
/// equivalent to integrality. Throws NotAMember otherwise.
bool is_extreme(const TransportMatrix& matrix, const BoundsSpec& spec);

struct DecomposeStats {
    int max_depth = 0;
    int splits = 0;
};

/// Splits a member into a convex combination of 0/1 vertices by repeatedly
/// pushing a perturbation plan to both of its step bounds and recursing on
/// the two boundary matrices; plans preserve the total sum when the instance
/// fixes it. Each push strictly decreases the fractional-complexity
/// potential, which bounds the recursion depth. Throws NotAMember.
Decomposition decompose(const TransportMatrix& matrix, const BoundsSpec& spec, DecomposeStats* stats = nullptr);

struct VerifyResult {
    bool ok = false;
    std::vector<std::string> diagnostics;
};

/// Re-checks every certificate invariant from scratch: positive weights
/// summing to one, integral member vertices (with the total-sum target when
/// present), no duplicate vertices, and exact reconstruction of the matrix.
VerifyResult verify_certificate(const TransportMatrix& matrix, const Decomposition& certificate,
                                const BoundsSpec& spec);

}  // namespace polytran
