#pragma once

#include "polytran/bounds_spec.hpp"
#include "polytran/rational.hpp"
#include "polytran/transport_matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polytran::testing {

/// Builds a matrix from rational literals, e.g. mat({{"1/2","0"},{"0","1/2"}}).
inline TransportMatrix mat(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Rat>> values;
    values.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Rat> parsed;
        parsed.reserve(row.size());
        for (const auto& text : row) parsed.push_back(parse_rational(text));
        values.push_back(std::move(parsed));
    }
    return TransportMatrix(std::move(values));
}

/// Doubly stochastic n x n instance (row and column sums exactly 1, total n).
inline BoundsSpec doubly_stochastic(int n) {
    std::vector<long long> ones(static_cast<std::size_t>(n), 1);
    return BoundsSpec(n, n, ones, ones, ones, ones, n);
}

/// Doubly substochastic n x m instance (sums at most 1, no total target).
inline BoundsSpec substochastic(int n, int m) {
    return BoundsSpec(n, m, std::vector<long long>(static_cast<std::size_t>(n), 0),
                      std::vector<long long>(static_cast<std::size_t>(n), 1),
                      std::vector<long long>(static_cast<std::size_t>(m), 0),
                      std::vector<long long>(static_cast<std::size_t>(m), 1));
}

/// Deterministic generator for property tests; SplitMix64 steps.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Rational with numerator in [-9, 9] and denominator in [1, 4].
    Rat small_rational() {
        const long long num = static_cast<long long>(below(19)) - 9;
        const long long den = static_cast<long long>(below(4)) + 1;
        return Rat(num, den);
    }
};

}  // namespace polytran::testing
