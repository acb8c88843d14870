#pragma once

#include "polytran/bounds_spec.hpp"
#include "polytran/transport_matrix.hpp"

#include <optional>
#include <vector>

namespace polytran {

enum class BoundSide { lower, upper };

struct EntryViolation {
    int row = 0;
    int col = 0;
    Rat value;
};

struct LineViolation {
    int index = 0;
    Rat sum;
    BoundSide side = BoundSide::lower;
    long long bound = 0;
};

struct SigmaViolation {
    Rat sigma;
    long long target = 0;
};

/// Full constraint diagnosis of one matrix against one instance.
struct MembershipReport {
    std::vector<EntryViolation> entry_violations;
    std::vector<LineViolation> row_violations;
    std::vector<LineViolation> col_violations;
    std::optional<SigmaViolation> sigma_violation;

    bool is_member() const {
        return entry_violations.empty() && row_violations.empty() && col_violations.empty() && !sigma_violation;
    }
};

/// Evaluates every constraint exactly and reports each failure.
/// Throws DimensionMismatch when shapes differ.
MembershipReport check_membership(const TransportMatrix& matrix, const BoundsSpec& spec);

inline bool is_member(const TransportMatrix& matrix, const BoundsSpec& spec) {
    return check_membership(matrix, spec).is_member();
}

}  // namespace polytran
