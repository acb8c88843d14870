#include "polytran/membership.hpp"

#include "polytran/errors.hpp"

#include <string>

namespace polytran {

MembershipReport check_membership(const TransportMatrix& matrix, const BoundsSpec& spec) {
    if (matrix.rows() != spec.n() || matrix.cols() != spec.m()) {
        throw DimensionMismatch("matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                                ", spec expects " + std::to_string(spec.n()) + "x" + std::to_string(spec.m()));
    }

    MembershipReport report;
    for (int i = 0; i < matrix.rows(); ++i) {
        for (int j = 0; j < matrix.cols(); ++j) {
            const Rat& value = matrix.at(i, j);
            if (value < 0 || value > 1) report.entry_violations.push_back({i, j, value});
        }
    }

    const auto row_sums = matrix.row_sums();
    for (int i = 0; i < matrix.rows(); ++i) {
        const Rat& sum = row_sums[static_cast<std::size_t>(i)];
        if (sum < spec.row_min(i)) {
            report.row_violations.push_back({i, sum, BoundSide::lower, spec.row_min(i)});
        } else if (sum > spec.row_max(i)) {
            report.row_violations.push_back({i, sum, BoundSide::upper, spec.row_max(i)});
        }
    }

    const auto col_sums = matrix.col_sums();
    for (int j = 0; j < matrix.cols(); ++j) {
        const Rat& sum = col_sums[static_cast<std::size_t>(j)];
        if (sum < spec.col_min(j)) {
            report.col_violations.push_back({j, sum, BoundSide::lower, spec.col_min(j)});
        } else if (sum > spec.col_max(j)) {
            report.col_violations.push_back({j, sum, BoundSide::upper, spec.col_max(j)});
        }
    }

    if (spec.total()) {
        Rat total = matrix.sigma();
        if (total != *spec.total()) report.sigma_violation = SigmaViolation{total, *spec.total()};
    }
    return report;
}

}  // namespace polytran
