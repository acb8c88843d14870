#pragma once

#include "polytran/rational.hpp"

#include <compare>
#include <vector>

namespace polytran {

/// A single matrix position. Ordered row-major, which fixes every
/// deterministic "smallest cell" choice in the library.
struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Dense n x m matrix of exact rationals. Entries are not restricted to
/// [0,1] by the type; polytope membership is a separate check, and the same
/// type carries cost matrices. All operations are pure.
class TransportMatrix {
public:
    TransportMatrix() = default;
    TransportMatrix(int rows, int cols);  // zero-filled
    explicit TransportMatrix(std::vector<std::vector<Rat>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& at(int i, int j) const { return data_[index(i, j)]; }
    Rat& at(int i, int j) { return data_[index(i, j)]; }
    const Rat& at(Cell c) const { return at(c.row, c.col); }
    Rat& at(Cell c) { return at(c.row, c.col); }

    std::vector<Rat> row_sums() const;
    std::vector<Rat> col_sums() const;
    Rat sigma() const;

    bool is_integral() const;  // every entry exactly 0 or 1

    /// Cells with 0 < value < 1, in row-major order.
    std::vector<Cell> fractional_support() const;
    /// Rows (resp. columns) owning at least one fractional cell.
    std::vector<int> fractional_rows() const;
    std::vector<int> fractional_cols() const;

    friend bool operator==(const TransportMatrix& a, const TransportMatrix& b);
    friend bool operator!=(const TransportMatrix& a, const TransportMatrix& b) { return !(a == b); }
    /// Lexicographic over shape then row-major entries; used for
    /// deterministic ordering and map keys.
    friend bool operator<(const TransportMatrix& a, const TransportMatrix& b);

    friend TransportMatrix operator+(const TransportMatrix& a, const TransportMatrix& b);
    friend TransportMatrix operator*(const Rat& scale, const TransportMatrix& a);

private:
    std::size_t index(int i, int j) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> data_;
};

}  // namespace polytran
