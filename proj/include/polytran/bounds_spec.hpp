#pragma once

#include <optional>
#include <vector>

namespace polytran {

/// One polytope instance: integral lower/upper bounds on every row sum and
/// column sum, entry bounds fixed to [0,1], and an optional total-sum target
/// k. Construction validates everything; instances are immutable afterwards.
class BoundsSpec {
public:
    BoundsSpec(int n, int m, std::vector<long long> row_min, std::vector<long long> row_max,
               std::vector<long long> col_min, std::vector<long long> col_max,
               std::optional<long long> total = std::nullopt);

    int n() const { return n_; }
    int m() const { return m_; }

    long long row_min(int i) const { return row_min_[static_cast<std::size_t>(i)]; }
    long long row_max(int i) const { return row_max_[static_cast<std::size_t>(i)]; }
    long long col_min(int j) const { return col_min_[static_cast<std::size_t>(j)]; }
    long long col_max(int j) const { return col_max_[static_cast<std::size_t>(j)]; }

    const std::vector<long long>& row_mins() const { return row_min_; }
    const std::vector<long long>& row_maxs() const { return row_max_; }
    const std::vector<long long>& col_mins() const { return col_min_; }
    const std::vector<long long>& col_maxs() const { return col_max_; }

    const std::optional<long long>& total() const { return total_; }

    long long total_row_max() const;
    long long total_col_max() const;

    friend bool operator==(const BoundsSpec&, const BoundsSpec&) = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<long long> row_min_, row_max_, col_min_, col_max_;
    std::optional<long long> total_;
};

}  // namespace polytran
