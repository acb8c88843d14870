#pragma once

#include "polytran/bounds_spec.hpp"
#include "polytran/decompose.hpp"
#include "polytran/transport_matrix.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace polytran {

/// All 0/1 members of an instance, without duplicates, in lexicographic
/// (row-major) order.
struct VertexSet {
    BoundsSpec spec;
    std::vector<TransportMatrix> vertices;
};

/// Cells cap for the exhaustive 2^(n*m) scan; keeps the full property suite
/// fast while staying configurable for deeper runs.
inline constexpr int kDefaultEnumerationCap = 20;

/// Filters every binary n x m matrix through the instance constraints.
/// Throws InstanceTooLarge when n*m exceeds the cap.
VertexSet enumerate_vertices(const BoundsSpec& spec, int cell_cap = kDefaultEnumerationCap);

/// Decides membership of `matrix` in the convex hull of the vertex set by an
/// exact Phase-I simplex over the vertex weights (Bland's rule, so the pivot
/// sequence cannot cycle). Returns a certificate when the matrix lies in the
/// hull, absent otherwise.
std::optional<Decomposition> hull_membership(const TransportMatrix& matrix, const VertexSet& vs);

/// Exhaustive scan of the vertex set for the smallest total cost; ties keep
/// the lexicographically smallest vertex.
std::pair<TransportMatrix, Rat> brute_min_cost(const TransportMatrix& cost, const VertexSet& vs);

/// Deterministic hull point: SplitMix64-seeded small integer weights over
/// all vertices, normalized to sum one. Identical across platforms for a
/// fixed seed.
TransportMatrix random_hull_point(const VertexSet& vs, std::uint64_t seed);

}  // namespace polytran
