#include "polytran/perturbation.hpp"

#include "polytran/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace polytran {

namespace {

std::string cell_text(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

// Adjacency of the bipartite fractional graph: for each line, the fractional
// cells on it sorted by the other coordinate. An optional ban set removes
// cells already consumed by another structure.
struct FractionalGraph {
    std::vector<std::vector<int>> row_cells;  // row i -> ascending cols
    std::vector<std::vector<int>> col_cells;  // col j -> ascending rows

    FractionalGraph(const TransportMatrix& matrix, const std::set<Cell>* banned = nullptr)
        : row_cells(static_cast<std::size_t>(matrix.rows())),
          col_cells(static_cast<std::size_t>(matrix.cols())) {
        for (int i = 0; i < matrix.rows(); ++i) {
            for (int j = 0; j < matrix.cols(); ++j) {
                if (!is_fractional(matrix.at(i, j))) continue;
                if (banned && banned->count({i, j}) != 0) continue;
                row_cells[static_cast<std::size_t>(i)].push_back(j);
                col_cells[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    }

    // Smallest-index fractional cell on `line` other than `exclude`.
    std::optional<Cell> next_on_line(Line line, Cell exclude) const {
        if (line.kind == LineKind::row) {
            for (int j : row_cells[static_cast<std::size_t>(line.index)]) {
                if (j != exclude.col || line.index != exclude.row) return Cell{line.index, j};
                // exclude matches only when it lies on this row
            }
        } else {
            for (int i : col_cells[static_cast<std::size_t>(line.index)]) {
                if (i != exclude.row || line.index != exclude.col) return Cell{i, line.index};
            }
        }
        return std::nullopt;
    }

    bool empty() const {
        for (const auto& cells : row_cells) {
            if (!cells.empty()) return false;
        }
        return true;
    }
};

Line other_line(Cell c, Line current) {
    if (current.kind == LineKind::row) return Line{LineKind::column, c.col};
    return Line{LineKind::row, c.row};
}

struct WalkResult {
    std::vector<Cell> cells;
    bool closed = false;
    Line start;     // first node of the walk
    Line terminal;  // last node; meaningful for open walks only
};

// Extends a walk cell by cell until it either terminates (no continuation on
// the current line) or would re-enter a previously visited line, in which
// case the enclosed even cycle is extracted.
WalkResult walk_from(const FractionalGraph& graph, Line start, Cell first_cell) {
    std::vector<Cell> cells{first_cell};
    std::vector<Line> nodes{start, other_line(first_cell, start)};

    for (;;) {
        Line current = nodes.back();
        std::optional<Cell> next = graph.next_on_line(current, cells.back());
        if (!next) {
            return WalkResult{std::move(cells), false, start, current};
        }
        Line entered = other_line(*next, current);
        auto seen = std::find(nodes.begin(), nodes.end(), entered);
        if (seen != nodes.end()) {
            const auto s = static_cast<std::size_t>(seen - nodes.begin());
            std::vector<Cell> cycle(cells.begin() + static_cast<std::ptrdiff_t>(s), cells.end());
            cycle.push_back(*next);
            return WalkResult{std::move(cycle), true, start, entered};
        }
        cells.push_back(*next);
        nodes.push_back(entered);
    }
}

AlternatingStructure structure_from_walk(WalkResult walk) {
    AlternatingStructure s;
    s.cells = std::move(walk.cells);
    if (walk.closed) {
        s.kind = StructureKind::even_cycle;
        s.start_line = std::nullopt;
    } else {
        s.kind = (s.cells.size() % 2 == 1) ? StructureKind::odd_path : StructureKind::even_cycle;
        s.start_line = walk.start;
    }
    return s;
}

// Depth-first search through the fractional graph used by the sum-preserving
// construction. Starting from a line whose sum is non-integral, it stops at
// the first line that again has a non-integral sum (an open alternating path
// whose endpoints both tolerate a sum change) or at the first repeated line
// (an even cycle, which changes no sums at all).
struct SecondaryStructure {
    std::vector<Cell> cells;
    bool closed = false;
};

class SecondarySearch {
public:
    SecondarySearch(const TransportMatrix& matrix, const FractionalGraph& graph,
                    const std::vector<bool>& row_sum_fractional, const std::vector<bool>& col_sum_fractional)
        : graph_(graph),
          row_sum_fractional_(row_sum_fractional),
          col_sum_fractional_(col_sum_fractional),
          row_state_(static_cast<std::size_t>(matrix.rows())),
          col_state_(static_cast<std::size_t>(matrix.cols())) {}

    std::optional<SecondaryStructure> run(Line start) {
        start_ = start;
        visit(start);
        std::vector<Cell> chain;
        return explore(start, std::nullopt, chain);
    }

private:
    struct NodeState {
        bool visited = false;
    };

    bool visited(Line line) const {
        return line.kind == LineKind::row ? row_state_[static_cast<std::size_t>(line.index)].visited
                                          : col_state_[static_cast<std::size_t>(line.index)].visited;
    }
    void visit(Line line) {
        auto& state = line.kind == LineKind::row ? row_state_[static_cast<std::size_t>(line.index)]
                                                 : col_state_[static_cast<std::size_t>(line.index)];
        state.visited = true;
    }
    bool sum_fractional(Line line) const {
        return line.kind == LineKind::row ? row_sum_fractional_[static_cast<std::size_t>(line.index)]
                                          : col_sum_fractional_[static_cast<std::size_t>(line.index)];
    }

    std::vector<Cell> cells_on(Line line) const {
        std::vector<Cell> cells;
        if (line.kind == LineKind::row) {
            for (int j : graph_.row_cells[static_cast<std::size_t>(line.index)]) cells.push_back({line.index, j});
        } else {
            for (int i : graph_.col_cells[static_cast<std::size_t>(line.index)]) cells.push_back({i, line.index});
        }
        return cells;
    }

    // chain holds the cells walked from the start line to `at`, entered the
    // lines those cells led to; the first hit of a fractional-sum line or of
    // an already visited line (a back edge, necessarily to a line on the
    // current chain) ends the search.
    std::optional<SecondaryStructure> explore(Line at, std::optional<Cell> arrived, std::vector<Cell>& chain) {
        for (const Cell& cell : cells_on(at)) {
            if (arrived && cell == *arrived) continue;
            const Line next = other_line(cell, at);
            if (visited(next)) {
                SecondaryStructure cycle;
                if (next == start_) {
                    cycle.cells = chain;
                } else {
                    const auto entered_at = std::find(entered_.begin(), entered_.end(), next);
                    if (entered_at == entered_.end()) {
                        throw InternalError("back edge to a line outside the search chain");
                    }
                    cycle.cells.assign(chain.begin() + (entered_at - entered_.begin()) + 1, chain.end());
                }
                cycle.cells.push_back(cell);
                cycle.closed = true;
                return cycle;
            }
            visit(next);
            chain.push_back(cell);
            entered_.push_back(next);
            if (sum_fractional(next)) {
                return SecondaryStructure{chain, false};
            }
            if (auto found = explore(next, cell, chain)) return found;
            chain.pop_back();
            entered_.pop_back();
        }
        return std::nullopt;
    }

    const FractionalGraph& graph_;
    const std::vector<bool>& row_sum_fractional_;
    const std::vector<bool>& col_sum_fractional_;
    std::vector<NodeState> row_state_, col_state_;
    Line start_;
    std::vector<Line> entered_;
};

std::vector<bool> non_integral_mask(const std::vector<Rat>& sums) {
    std::vector<bool> mask(sums.size());
    for (std::size_t p = 0; p < sums.size(); ++p) mask[p] = !is_integer(sums[p]);
    return mask;
}

// Any even cycle of fractional cells, anywhere in the matrix; absent when the
// fractional graph is a forest.
std::optional<SecondaryStructure> find_any_cycle(const TransportMatrix& matrix) {
    const FractionalGraph graph(matrix);
    const std::vector<bool> no_rows(static_cast<std::size_t>(matrix.rows()), false);
    const std::vector<bool> no_cols(static_cast<std::size_t>(matrix.cols()), false);
    for (int i = 0; i < matrix.rows(); ++i) {
        if (graph.row_cells[static_cast<std::size_t>(i)].empty()) continue;
        SecondarySearch search(matrix, graph, no_rows, no_cols);
        if (auto found = search.run(Line{LineKind::row, i}); found && found->closed) return found;
    }
    return std::nullopt;
}

// Alternating +-1 coefficients along a structure; `lead` is the coefficient
// of the first cell (-1 for primary structures, +1 for the secondary one).
void append_signed_support(std::map<Cell, Rat>& support, const std::vector<Cell>& cells, int lead) {
    int sign = lead;
    for (const Cell& c : cells) {
        auto [it, inserted] = support.emplace(c, sign);
        if (!inserted) throw InternalError("perturbation supports overlap at cell " + cell_text(c));
        sign = -sign;
    }
}

// Largest admissible step in each direction: the minimum over entry slacks of
// supported cells and sum slacks of every line with a nonzero net
// coefficient. Every such slack is strictly positive for supports built on
// fractional cells whose changed lines have non-integral sums.
std::pair<Rat, Rat> step_bounds(const TransportMatrix& matrix, const BoundsSpec& spec,
                                const std::vector<std::pair<Cell, Rat>>& support) {
    std::optional<Rat> plus, minus;
    auto shrink = [](std::optional<Rat>& bound, const Rat& candidate) {
        if (!bound || candidate < *bound) bound = candidate;
    };

    std::map<int, Rat> row_delta, col_delta;
    for (const auto& [cell, coeff] : support) {
        const Rat& value = matrix.at(cell);
        if (coeff > 0) {
            shrink(plus, Rat((1 - value) / coeff));
            shrink(minus, Rat(value / coeff));
        } else {
            shrink(plus, Rat(value / -coeff));
            shrink(minus, Rat((1 - value) / -coeff));
        }
        row_delta[cell.row] += coeff;
        col_delta[cell.col] += coeff;
    }

    const auto row_sums = matrix.row_sums();
    const auto col_sums = matrix.col_sums();
    auto line_terms = [&](const Rat& sum, const Rat& delta, long long lo, long long hi) {
        if (delta > 0) {
            shrink(plus, Rat((hi - sum) / delta));
            shrink(minus, Rat((sum - lo) / delta));
        } else if (delta < 0) {
            shrink(plus, Rat((sum - lo) / -delta));
            shrink(minus, Rat((hi - sum) / -delta));
        }
    };
    for (const auto& [i, delta] : row_delta) {
        line_terms(row_sums[static_cast<std::size_t>(i)], delta, spec.row_min(i), spec.row_max(i));
    }
    for (const auto& [j, delta] : col_delta) {
        line_terms(col_sums[static_cast<std::size_t>(j)], delta, spec.col_min(j), spec.col_max(j));
    }

    if (!plus || !minus || *plus <= 0 || *minus <= 0) {
        throw InternalError("degenerate perturbation: admissible step interval is empty");
    }
    return {*plus, *minus};
}

PerturbationPlan plan_from_support(const TransportMatrix& matrix, const BoundsSpec& spec,
                                   std::map<Cell, Rat> support) {
    PerturbationPlan plan;
    Rat total = 0;
    plan.support.reserve(support.size());
    for (auto& [cell, coeff] : support) {
        total += coeff;
        plan.support.emplace_back(cell, std::move(coeff));
    }
    if (!is_integer(total)) throw InternalError("structure support has non-integral total coefficient");
    plan.sigma_delta_per_eps = static_cast<int>(numerator(total));
    auto [plus, minus] = step_bounds(matrix, spec, plan.support);
    plan.eps_plus = std::move(plus);
    plan.eps_minus = std::move(minus);
    return plan;
}

void require_fractional_cells(const TransportMatrix& matrix, const AlternatingStructure& s) {
    if (s.cells.empty()) throw StructureMatrixMismatch("structure has no cells");
    for (const Cell& c : s.cells) {
        if (c.row < 0 || c.row >= matrix.rows() || c.col < 0 || c.col >= matrix.cols()) {
            throw StructureMatrixMismatch("structure cell " + cell_text(c) + " is outside the matrix");
        }
        if (!is_fractional(matrix.at(c))) {
            throw StructureMatrixMismatch("structure cell " + cell_text(c) + " is not fractional in the matrix");
        }
    }
}

int line_count(const TransportMatrix& matrix, LineKind kind) {
    return kind == LineKind::row ? matrix.rows() : matrix.cols();
}

int line_coordinate(Cell c, LineKind kind) {
    return kind == LineKind::row ? c.row : c.col;
}

}  // namespace

AlternatingStructure find_structure(const TransportMatrix& matrix, const BoundsSpec& spec) {
    (void)spec;  // the search runs on the fractional pattern alone
    FractionalGraph graph(matrix);
    if (graph.empty()) throw NoFractionalCell("matrix has no fractional entries");

    // A line owning exactly one fractional cell seeds an open walk.
    for (int i = 0; i < matrix.rows(); ++i) {
        if (graph.row_cells[static_cast<std::size_t>(i)].size() == 1) {
            Cell first{i, graph.row_cells[static_cast<std::size_t>(i)].front()};
            return structure_from_walk(walk_from(graph, Line{LineKind::row, i}, first));
        }
    }
    for (int j = 0; j < matrix.cols(); ++j) {
        if (graph.col_cells[static_cast<std::size_t>(j)].size() == 1) {
            Cell first{graph.col_cells[static_cast<std::size_t>(j)].front(), j};
            return structure_from_walk(walk_from(graph, Line{LineKind::column, j}, first));
        }
    }

    // Every fractional line has two or more fractional cells, so the walk
    // can always extend and must close into an even cycle. Seed it at the
    // smallest fractional cell, moving along its row first.
    for (int i = 0; i < matrix.rows(); ++i) {
        if (graph.row_cells[static_cast<std::size_t>(i)].empty()) continue;
        Cell first{i, graph.row_cells[static_cast<std::size_t>(i)].front()};
        return structure_from_walk(walk_from(graph, Line{LineKind::column, first.col}, first));
    }
    throw InternalError("fractional graph reported non-empty but no seed cell was found");
}

PerturbationPlan build_plan(const TransportMatrix& matrix, const BoundsSpec& spec, const AlternatingStructure& s) {
    require_fractional_cells(matrix, s);
    std::map<Cell, Rat> support;
    append_signed_support(support, s.cells, -1);
    return plan_from_support(matrix, spec, std::move(support));
}

MutableLines mutable_lines(const TransportMatrix& matrix, const BoundsSpec& spec) {
    if (matrix.rows() != spec.n() || matrix.cols() != spec.m()) {
        throw DimensionMismatch("matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                                ", spec expects " + std::to_string(spec.n()) + "x" + std::to_string(spec.m()));
    }
    MutableLines result;
    const auto row_sums = matrix.row_sums();
    for (int i = 0; i < matrix.rows(); ++i) {
        const Rat& sum = row_sums[static_cast<std::size_t>(i)];
        if (sum > spec.row_min(i) && sum < spec.row_max(i)) result.rows.push_back(i);
    }
    const auto col_sums = matrix.col_sums();
    for (int j = 0; j < matrix.cols(); ++j) {
        const Rat& sum = col_sums[static_cast<std::size_t>(j)];
        if (sum > spec.col_min(j) && sum < spec.col_max(j)) result.cols.push_back(j);
    }

    // A line with a single fractional cell has a non-integral sum between
    // integral bounds, hence must come out mutable.
    FractionalGraph graph(matrix);
    for (int i = 0; i < matrix.rows(); ++i) {
        if (graph.row_cells[static_cast<std::size_t>(i)].size() == 1 &&
            !std::binary_search(result.rows.begin(), result.rows.end(), i)) {
            throw InternalError("row " + std::to_string(i) + " holds a single fractional cell but is not mutable");
        }
    }
    for (int j = 0; j < matrix.cols(); ++j) {
        if (graph.col_cells[static_cast<std::size_t>(j)].size() == 1 &&
            !std::binary_search(result.cols.begin(), result.cols.end(), j)) {
            throw InternalError("column " + std::to_string(j) + " holds a single fractional cell but is not mutable");
        }
    }
    return result;
}

PerturbationPlan build_k_preserving_plan(const TransportMatrix& matrix, const BoundsSpec& spec,
                                         const AlternatingStructure& s) {
    if (!spec.total()) {
        throw std::invalid_argument("build_k_preserving_plan requires an instance with a total-sum target");
    }
    require_fractional_cells(matrix, s);

    // Cycles and even paths change the total sum by zero per unit step.
    if (s.cells.size() % 2 == 0) return build_plan(matrix, spec, s);
    if (!s.start_line) throw StructureMatrixMismatch("odd structure lacks its seed line");

    const Line seed = *s.start_line;
    const auto row_sum_fractional = non_integral_mask(matrix.row_sums());
    const auto col_sum_fractional = non_integral_mask(matrix.col_sums());
    const auto& seed_mask = seed.kind == LineKind::row ? row_sum_fractional : col_sum_fractional;

    // Because sigma(matrix) is an integer and the seed line's sum is not,
    // some other line of the same orientation also has a non-integral sum.
    // Such a line is automatically mutable.
    std::vector<int> candidates;
    for (int idx = 0; idx < line_count(matrix, seed.kind); ++idx) {
        if (idx == seed.index) continue;
        if (seed_mask[static_cast<std::size_t>(idx)]) candidates.push_back(idx);
    }
    if (candidates.empty()) {
        throw NoSecondMutableLine("no second line with non-integral sum; total sum differs from the target");
    }

    const std::set<Cell> primary_cells(s.cells.begin(), s.cells.end());
    for (int candidate : candidates) {
        // The second line may already lie on the path: the prefix ending at
        // its first cell is even and preserves the total sum on its own.
        auto hit = std::find_if(s.cells.begin(), s.cells.end(), [&](const Cell& c) {
            return line_coordinate(c, seed.kind) == candidate;
        });
        if (hit != s.cells.end()) {
            const auto prefix_len = static_cast<std::size_t>(hit - s.cells.begin()) + 1;
            if (prefix_len % 2 != 0) {
                throw InternalError("path prefix ending at the second line has odd length");
            }
            AlternatingStructure truncated;
            truncated.cells.assign(s.cells.begin(), s.cells.begin() + static_cast<std::ptrdiff_t>(prefix_len));
            truncated.kind = StructureKind::even_cycle;
            truncated.start_line = seed;
            return build_plan(matrix, spec, truncated);
        }

        // Disjoint second line: search a secondary structure from it through
        // the graph with the primary cells removed, so the supports cannot
        // overlap. The search stops at the first line that tolerates a sum
        // change, or closes an even cycle.
        FractionalGraph reduced(matrix, &primary_cells);
        SecondarySearch search(matrix, reduced, row_sum_fractional, col_sum_fractional);
        const auto found = search.run(Line{seed.kind, candidate});
        if (!found) continue;
        if (found->closed || found->cells.size() % 2 == 0) {
            // Even on its own: preserves the total sum and replaces the odd
            // path entirely.
            AlternatingStructure even;
            even.cells = found->cells;
            even.kind = StructureKind::even_cycle;
            even.start_line = found->closed ? std::nullopt : std::make_optional(Line{seed.kind, candidate});
            return build_plan(matrix, spec, even);
        }
        std::map<Cell, Rat> support;
        append_signed_support(support, s.cells, -1);
        append_signed_support(support, found->cells, +1);
        PerturbationPlan plan = plan_from_support(matrix, spec, std::move(support));
        if (plan.sigma_delta_per_eps != 0) {
            throw InternalError("combined perturbation is not sum-preserving");
        }
        return plan;
    }

    // No candidate line yielded a partner: the fractional graph then
    // necessarily contains a cycle, which preserves every line sum.
    if (auto cycle = find_any_cycle(matrix)) {
        AlternatingStructure even;
        even.cells = cycle->cells;
        even.kind = StructureKind::even_cycle;
        return build_plan(matrix, spec, even);
    }
    if (auto fallback = find_direction_nullspace(matrix, spec)) return *fallback;
    throw NoSecondMutableLine("no sum-preserving direction exists; matrix is extreme or not a member");
}

TransportMatrix apply_plan(const TransportMatrix& matrix, const PerturbationPlan& plan, const Rat& eps,
                           int direction) {
    if (direction != 1 && direction != -1) {
        throw std::invalid_argument("direction must be +1 or -1");
    }
    const Rat& bound = direction == 1 ? plan.eps_plus : plan.eps_minus;
    if (eps < 0 || eps > bound) {
        throw EpsOutOfRange("eps " + to_string(eps) + " outside [0, " + to_string(bound) + "]");
    }
    TransportMatrix result = matrix;
    for (const auto& [cell, coeff] : plan.support) {
        result.at(cell) += direction * eps * coeff;
    }
    return result;
}

std::optional<PerturbationPlan> find_direction_nullspace(const TransportMatrix& matrix, const BoundsSpec& spec) {
    const std::vector<Cell> support = matrix.fractional_support();
    if (support.empty()) return std::nullopt;
    const auto vars = support.size();

    // Equality system: every line sum sitting at one of its bounds must stay
    // put, and so must the total sum when the instance fixes it.
    std::vector<std::vector<Rat>> system;
    const auto row_sums = matrix.row_sums();
    const auto col_sums = matrix.col_sums();
    auto add_line_row = [&](LineKind kind, int index) {
        std::vector<Rat> row(vars);
        bool touched = false;
        for (std::size_t v = 0; v < vars; ++v) {
            if (line_coordinate(support[v], kind) == index) {
                row[v] = 1;
                touched = true;
            }
        }
        if (touched) system.push_back(std::move(row));
    };
    for (int i = 0; i < matrix.rows(); ++i) {
        const Rat& sum = row_sums[static_cast<std::size_t>(i)];
        if (sum == spec.row_min(i) || sum == spec.row_max(i)) add_line_row(LineKind::row, i);
    }
    for (int j = 0; j < matrix.cols(); ++j) {
        const Rat& sum = col_sums[static_cast<std::size_t>(j)];
        if (sum == spec.col_min(j) || sum == spec.col_max(j)) add_line_row(LineKind::column, j);
    }
    if (spec.total()) system.emplace_back(vars, Rat(1));

    // Gauss-Jordan elimination; exact arithmetic needs no pivot scaling.
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < vars && rank < system.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < system.size() && system[pivot][col] == 0) ++pivot;
        if (pivot == system.size()) continue;
        std::swap(system[rank], system[pivot]);
        const Rat lead = system[rank][col];
        for (Rat& value : system[rank]) value /= lead;
        for (std::size_t r = 0; r < system.size(); ++r) {
            if (r == rank || system[r][col] == 0) continue;
            const Rat factor = system[r][col];
            for (std::size_t c = col; c < vars; ++c) system[r][c] -= factor * system[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(vars, false);
    for (std::size_t col : pivot_col) is_pivot[col] = true;
    std::size_t free_col = vars;
    for (std::size_t col = 0; col < vars; ++col) {
        if (!is_pivot[col]) {
            free_col = col;
            break;
        }
    }
    if (free_col == vars) return std::nullopt;  // only the zero direction: extreme point

    std::vector<Rat> direction(vars);
    direction[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r) direction[pivot_col[r]] = -system[r][free_col];

    Rat total = 0;
    for (const Rat& value : direction) total += value;
    if (total != 0) {
        const Rat scale = Rat(-1) / total;  // normalize the sum drift to -1 per unit step
        for (Rat& value : direction) value *= scale;
    } else {
        for (const Rat& value : direction) {
            if (value == 0) continue;
            if (value > 0) {
                for (Rat& entry : direction) entry = -entry;
            }
            break;  // leading coefficient negative, matching the sign convention
        }
    }

    PerturbationPlan plan;
    for (std::size_t v = 0; v < vars; ++v) {
        if (direction[v] != 0) plan.support.emplace_back(support[v], direction[v]);
    }
    plan.sigma_delta_per_eps = total != 0 ? -1 : 0;
    auto [plus, minus] = step_bounds(matrix, spec, plan.support);
    plan.eps_plus = std::move(plus);
    plan.eps_minus = std::move(minus);
    return plan;
}

int fractional_potential(const TransportMatrix& matrix) {
    int potential = static_cast<int>(matrix.fractional_support().size());
    for (const Rat& sum : matrix.row_sums()) {
        if (!is_integer(sum)) ++potential;
    }
    for (const Rat& sum : matrix.col_sums()) {
        if (!is_integer(sum)) ++potential;
    }
    return potential;
}

}  // namespace polytran
