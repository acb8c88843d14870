#pragma once

#include "helpers.hpp"

#include "polytran/bounds_spec.hpp"

#include <vector>

namespace polytran::testing {

/// Deterministic grid of instances: every shape with n,m in {1..3}, bound
/// values drawn from {0,1,2} with lower <= upper per line, plus the named
/// special cases. The draw is seeded, so the grid is identical across runs.
inline std::vector<BoundsSpec> spec_grid(int per_shape = 40) {
    std::vector<BoundsSpec> grid;
    Rng rng(0x706F6C79u);  // fixed seed
    // Lower bounds lean toward zero; demanding lower bounds on every line
    // makes most random instances empty, which starves the hull-point tests.
    auto draw_lower = [&rng] {
        return rng.below(2) == 0 ? 0LL : static_cast<long long>(1 + rng.below(2));
    };
    for (int n = 1; n <= 3; ++n) {
        for (int m = 1; m <= 3; ++m) {
            for (int draw = 0; draw < per_shape; ++draw) {
                std::vector<long long> rmin, rmax, cmin, cmax;
                for (int i = 0; i < n; ++i) {
                    const long long lo = draw_lower();
                    rmin.push_back(lo);
                    rmax.push_back(lo + static_cast<long long>(rng.below(static_cast<std::uint64_t>(3 - lo))));
                }
                for (int j = 0; j < m; ++j) {
                    const long long lo = draw_lower();
                    cmin.push_back(lo);
                    cmax.push_back(lo + static_cast<long long>(rng.below(static_cast<std::uint64_t>(3 - lo))));
                }
                grid.emplace_back(n, m, rmin, rmax, cmin, cmax);
            }
        }
    }
    grid.push_back(doubly_stochastic(2));
    grid.push_back(doubly_stochastic(3));
    grid.push_back(substochastic(2, 2));
    grid.push_back(substochastic(3, 3));
    grid.push_back(substochastic(2, 3));
    return grid;
}

}  // namespace polytran::testing
