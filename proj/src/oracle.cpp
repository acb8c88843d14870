#include "polytran/oracle.hpp"

#include "polytran/errors.hpp"
#include "polytran/membership.hpp"

#include <map>
#include <string>

namespace polytran {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

VertexSet enumerate_vertices(const BoundsSpec& spec, int cell_cap) {
    const int cells = spec.n() * spec.m();
    if (cells > cell_cap) {
        throw InstanceTooLarge("n*m=" + std::to_string(cells) + " exceeds enumeration cap " +
                               std::to_string(cell_cap));
    }

    VertexSet result{spec, {}};
    std::vector<long long> row_sum(static_cast<std::size_t>(spec.n()));
    std::vector<long long> col_sum(static_cast<std::size_t>(spec.m()));
    const std::uint64_t limit = 1ULL << cells;
    // Bit (cells-1-b) holds cell b in row-major order, so ascending masks
    // enumerate matrices in ascending lexicographic order.
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        std::fill(row_sum.begin(), row_sum.end(), 0LL);
        std::fill(col_sum.begin(), col_sum.end(), 0LL);
        long long total = 0;
        for (int b = 0; b < cells; ++b) {
            if ((mask >> (cells - 1 - b)) & 1ULL) {
                row_sum[static_cast<std::size_t>(b / spec.m())] += 1;
                col_sum[static_cast<std::size_t>(b % spec.m())] += 1;
                ++total;
            }
        }
        bool ok = !spec.total() || total == *spec.total();
        for (int i = 0; ok && i < spec.n(); ++i) {
            const long long sum = row_sum[static_cast<std::size_t>(i)];
            ok = sum >= spec.row_min(i) && sum <= spec.row_max(i);
        }
        for (int j = 0; ok && j < spec.m(); ++j) {
            const long long sum = col_sum[static_cast<std::size_t>(j)];
            ok = sum >= spec.col_min(j) && sum <= spec.col_max(j);
        }
        if (!ok) continue;

        TransportMatrix vertex(spec.n(), spec.m());
        for (int b = 0; b < cells; ++b) {
            if ((mask >> (cells - 1 - b)) & 1ULL) vertex.at(b / spec.m(), b % spec.m()) = 1;
        }
        result.vertices.push_back(std::move(vertex));
    }
    return result;
}

std::optional<Decomposition> hull_membership(const TransportMatrix& matrix, const VertexSet& vs) {
    if (vs.vertices.empty()) return std::nullopt;
    if (matrix.rows() != vs.spec.n() || matrix.cols() != vs.spec.m()) {
        throw std::invalid_argument("matrix shape does not match the vertex set");
    }

    // Phase-I simplex on: sum_v alpha_v * V(cell) = A(cell) for every cell,
    // sum_v alpha_v = 1, alpha >= 0, minimizing the sum of artificials.
    const std::size_t vars = vs.vertices.size();
    const std::size_t rows = static_cast<std::size_t>(matrix.rows() * matrix.cols()) + 1;
    const std::size_t cols = vars + rows + 1;  // variables, artificials, rhs
    std::vector<std::vector<Rat>> tab(rows, std::vector<Rat>(cols));

    for (std::size_t r = 0; r + 1 < rows; ++r) {
        const int i = static_cast<int>(r) / matrix.cols();
        const int j = static_cast<int>(r) % matrix.cols();
        for (std::size_t v = 0; v < vars; ++v) tab[r][v] = vs.vertices[v].at(i, j);
        tab[r][cols - 1] = matrix.at(i, j);
    }
    for (std::size_t v = 0; v < vars; ++v) tab[rows - 1][v] = 1;
    tab[rows - 1][cols - 1] = 1;

    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        // Flip rows with negative right-hand side so artificials start feasible.
        if (tab[r][cols - 1] < 0) {
            for (Rat& value : tab[r]) value = -value;
        }
        tab[r][vars + r] = 1;
        basis[r] = vars + r;
    }

    // Reduced costs of the phase objective, kept incrementally.
    std::vector<Rat> reduced(vars);
    Rat objective = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t v = 0; v < vars; ++v) reduced[v] += tab[r][v];
        objective += tab[r][cols - 1];
    }

    for (;;) {
        // Bland's rule: smallest-index improving variable enters.
        std::size_t entering = vars;
        for (std::size_t v = 0; v < vars; ++v) {
            if (reduced[v] > 0) {
                entering = v;
                break;
            }
        }
        if (entering == vars) break;

        std::size_t leaving = rows;
        Rat best_ratio;
        for (std::size_t r = 0; r < rows; ++r) {
            if (tab[r][entering] <= 0) continue;
            const Rat ratio = tab[r][cols - 1] / tab[r][entering];
            if (leaving == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leaving])) {
                leaving = r;
                best_ratio = ratio;
            }
        }
        if (leaving == rows) {
            throw InternalError("phase-I objective unbounded");
        }

        const Rat pivot = tab[leaving][entering];
        for (Rat& value : tab[leaving]) value /= pivot;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leaving || tab[r][entering] == 0) continue;
            const Rat factor = tab[r][entering];
            for (std::size_t c = 0; c < cols; ++c) tab[r][c] -= factor * tab[leaving][c];
        }
        const Rat factor = reduced[entering];
        for (std::size_t v = 0; v < vars; ++v) reduced[v] -= factor * tab[leaving][v];
        objective -= factor * tab[leaving][cols - 1];
        basis[leaving] = entering;
    }

    if (objective != 0) return std::nullopt;

    std::map<TransportMatrix, Rat> weights;
    for (std::size_t r = 0; r < rows; ++r) {
        if (basis[r] < vars && tab[r][cols - 1] > 0) weights[vs.vertices[basis[r]]] += tab[r][cols - 1];
    }
    Decomposition certificate;
    for (auto& [vertex, weight] : weights) certificate.terms.push_back({std::move(weight), vertex});
    return certificate;
}

std::pair<TransportMatrix, Rat> brute_min_cost(const TransportMatrix& cost, const VertexSet& vs) {
    if (vs.vertices.empty()) {
        throw std::invalid_argument("brute_min_cost requires a non-empty vertex set");
    }
    if (cost.rows() != vs.spec.n() || cost.cols() != vs.spec.m()) {
        throw std::invalid_argument("cost shape does not match the vertex set");
    }
    const TransportMatrix* best = nullptr;
    Rat best_value;
    for (const TransportMatrix& vertex : vs.vertices) {
        Rat value = 0;
        for (int i = 0; i < cost.rows(); ++i) {
            for (int j = 0; j < cost.cols(); ++j) {
                if (vertex.at(i, j) == 1) value += cost.at(i, j);
            }
        }
        if (best == nullptr || value < best_value) {
            best = &vertex;
            best_value = std::move(value);
        }
    }
    return {*best, best_value};
}

TransportMatrix random_hull_point(const VertexSet& vs, std::uint64_t seed) {
    if (vs.vertices.empty()) {
        throw std::invalid_argument("random_hull_point requires a non-empty vertex set");
    }
    std::uint64_t state = seed;
    long long total = 0;
    TransportMatrix point(vs.spec.n(), vs.spec.m());
    for (const TransportMatrix& vertex : vs.vertices) {
        const long long weight = 1 + static_cast<long long>(splitmix64(state) % 8);
        total += weight;
        for (int i = 0; i < vertex.rows(); ++i) {
            for (int j = 0; j < vertex.cols(); ++j) {
                if (vertex.at(i, j) == 1) point.at(i, j) += weight;
            }
        }
    }
    for (int i = 0; i < point.rows(); ++i) {
        for (int j = 0; j < point.cols(); ++j) point.at(i, j) /= total;
    }
    return point;
}

}  // namespace polytran
