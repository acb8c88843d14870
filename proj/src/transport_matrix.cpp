#include "polytran/transport_matrix.hpp"

#include "polytran/errors.hpp"

#include <cassert>
#include <string>

namespace polytran {

TransportMatrix::TransportMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    if (rows <= 0 || cols <= 0) {
        throw DimensionMismatch("matrix dimensions must be positive, got " + std::to_string(rows) + "x" +
                                std::to_string(cols));
    }
}

TransportMatrix::TransportMatrix(std::vector<std::vector<Rat>> rows) {
    if (rows.empty() || rows.front().empty()) {
        throw DimensionMismatch("matrix must have at least one row and one column");
    }
    rows_ = static_cast<int>(rows.size());
    cols_ = static_cast<int>(rows.front().size());
    data_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols_) {
            throw DimensionMismatch("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                    " entries, expected " + std::to_string(cols_));
        }
        for (auto& value : rows[i]) data_.push_back(std::move(value));
    }
}

std::size_t TransportMatrix::index(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
}

std::vector<Rat> TransportMatrix::row_sums() const {
    std::vector<Rat> sums(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) sums[static_cast<std::size_t>(i)] += at(i, j);
    }
    return sums;
}

std::vector<Rat> TransportMatrix::col_sums() const {
    std::vector<Rat> sums(static_cast<std::size_t>(cols_));
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) sums[static_cast<std::size_t>(j)] += at(i, j);
    }
    return sums;
}

Rat TransportMatrix::sigma() const {
    Rat total = 0;
    for (const Rat& value : data_) total += value;
    return total;
}

bool TransportMatrix::is_integral() const {
    for (const Rat& value : data_) {
        if (value != 0 && value != 1) return false;
    }
    return true;
}

std::vector<Cell> TransportMatrix::fractional_support() const {
    std::vector<Cell> cells;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (is_fractional(at(i, j))) cells.push_back({i, j});
        }
    }
    return cells;
}

std::vector<int> TransportMatrix::fractional_rows() const {
    std::vector<int> lines;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (is_fractional(at(i, j))) {
                lines.push_back(i);
                break;
            }
        }
    }
    return lines;
}

std::vector<int> TransportMatrix::fractional_cols() const {
    std::vector<int> lines;
    for (int j = 0; j < cols_; ++j) {
        for (int i = 0; i < rows_; ++i) {
            if (is_fractional(at(i, j))) {
                lines.push_back(j);
                break;
            }
        }
    }
    return lines;
}

bool operator==(const TransportMatrix& a, const TransportMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool operator<(const TransportMatrix& a, const TransportMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t p = 0; p < a.data_.size(); ++p) {
        if (a.data_[p] != b.data_[p]) return a.data_[p] < b.data_[p];
    }
    return false;
}

TransportMatrix operator+(const TransportMatrix& a, const TransportMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw DimensionMismatch("cannot add " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " and " +
                                std::to_string(b.rows_) + "x" + std::to_string(b.cols_) + " matrices");
    }
    TransportMatrix out = a;
    for (std::size_t p = 0; p < out.data_.size(); ++p) out.data_[p] += b.data_[p];
    return out;
}

TransportMatrix operator*(const Rat& scale, const TransportMatrix& a) {
    TransportMatrix out = a;
    for (Rat& value : out.data_) value *= scale;
    return out;
}

}  // namespace polytran
