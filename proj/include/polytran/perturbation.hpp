#pragma once

#include "polytran/bounds_spec.hpp"
#include "polytran/membership.hpp"
#include "polytran/transport_matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace polytran {

enum class LineKind { row, column };

/// A row or column identified by orientation and index.
struct Line {
    LineKind kind = LineKind::row;
    int index = 0;

    friend bool operator==(const Line&, const Line&) = default;
};

enum class StructureKind { even_cycle, odd_path };

/// A walk through the bipartite graph whose edges are the fractional cells:
/// consecutive cells alternately share a row and a column. Closed walks are
/// even cycles. Open walks carry the singleton-fractional line that seeded
/// them in start_line; open walks of even length are handled exactly like
/// cycles (kind even_cycle with start_line present), odd ones are odd paths.
struct AlternatingStructure {
    std::vector<Cell> cells;
    StructureKind kind = StructureKind::even_cycle;
    std::optional<Line> start_line;

    bool closed() const { return kind == StructureKind::even_cycle && !start_line; }
};

/// A feasible two-sided perturbation direction: signed coefficients on
/// fractional cells plus the largest admissible step in each direction.
/// Structure-derived plans carry coefficients +1/-1; the nullspace fallback
/// may carry general rationals.
struct PerturbationPlan {
    std::vector<std::pair<Cell, Rat>> support;  // sorted by cell, coefficients nonzero
    Rat eps_plus;
    Rat eps_minus;
    int sigma_delta_per_eps = 0;  // change of the total sum per unit step
};

/// Finds an alternating structure among the fractional cells of a member
/// matrix: an even cycle, or an open path seeded at a singleton-fractional
/// line (scanned rows first, then columns). Walks extend along the
/// fractional cell with the smallest index in the current line. Throws
/// NoFractionalCell when the matrix is integral.
AlternatingStructure find_structure(const TransportMatrix& matrix, const BoundsSpec& spec);

/// Builds the signed plan for a structure: alternating coefficients starting
/// with -1 on the first cell, step bounds folding in the entry slack of every
/// supported cell and the sum slack of every line whose sum the support
/// changes. Throws StructureMatrixMismatch if the structure does not consist
/// of fractional cells of the matrix.
PerturbationPlan build_plan(const TransportMatrix& matrix, const BoundsSpec& spec, const AlternatingStructure& s);

/// Lines whose sum lies strictly between its bounds, so a small perturbation
/// of the line is admissible.
struct MutableLines {
    std::vector<int> rows;
    std::vector<int> cols;
};
MutableLines mutable_lines(const TransportMatrix& matrix, const BoundsSpec& spec);

/// Builds a total-sum-preserving plan for a member of a fixed-sum instance.
/// Even structures already preserve the sum and are delegated to build_plan.
/// For an odd path, locates a second line of the seed's orientation with a
/// non-integral sum (guaranteed to exist when sigma(matrix) equals the
/// target): if that line meets the path the path is truncated to the even
/// prefix ending there; otherwise a second structure with the opposite sign
/// convention is walked from it, avoiding the first structure's cells, and
/// the two supports are combined. Throws NoSecondMutableLine when no such
/// line exists (possible only when sigma differs from the target).
PerturbationPlan build_k_preserving_plan(const TransportMatrix& matrix, const BoundsSpec& spec,
                                         const AlternatingStructure& s);

/// Returns matrix + direction * eps * plan support, exactly.
/// direction is +1 or -1; eps must lie in [0, eps_plus] resp. [0, eps_minus].
TransportMatrix apply_plan(const TransportMatrix& matrix, const PerturbationPlan& plan, const Rat& eps,
                           int direction);

/// Exact-linear-algebra route to a feasible direction: a nonzero vector
/// supported on the fractional cells that preserves every line sum sitting
/// at one of its bounds (and the total sum when the instance fixes it).
/// Absent exactly when the matrix is an extreme point.
std::optional<PerturbationPlan> find_direction_nullspace(const TransportMatrix& matrix, const BoundsSpec& spec);

/// Fractional-complexity potential: number of fractional cells plus number
/// of lines with non-integral sum. Strictly decreases when a structure plan
/// is pushed to either step bound.
int fractional_potential(const TransportMatrix& matrix);

}  // namespace polytran
