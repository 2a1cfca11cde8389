#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "meshforge/rational.hpp"

namespace meshforge {

// Sparse row vector over Q, kept sorted by column index with no zero entries.
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rat& scale_b);
void sparse_normalize(SparseVec& v);  // leading coefficient -> 1

// Incremental row echelon form over Q. Rows are fully back-substituted, so
// `reduce` expresses any vector modulo the span in terms of non-pivot columns.
class RowEchelon {
public:
    // Reduces v modulo the current span. Returns the residue (possibly empty).
    SparseVec reduce(SparseVec v) const;

    // Reduces and, if the residue is nonzero, inserts it as a new pivot row
    // (with back-substitution into existing rows). Returns the inserted row,
    // or an empty vector when v was already in the span.
    SparseVec insert(SparseVec v);

    size_t rank() const { return rows_.size(); }
    bool is_pivot(int col) const { return pivot_of_col_.count(col) != 0; }
    const std::vector<SparseVec>& rows() const { return rows_; }

private:
    std::vector<SparseVec> rows_;       // echelon rows, leading coeff 1
    std::map<int, size_t> pivot_of_col_;  // pivot column -> row index
};

// Dense exact matrix, rows x cols; entry(i, j).
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    static RatMatrix identity(size_t n);
    RatMatrix multiply(const RatMatrix& other) const;  // this * other

    size_t rank() const;
    // Basis of the right kernel {x : A x = 0}, as columns of a cols x k matrix.
    RatMatrix kernel_basis() const;

    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    size_t rows_, cols_;
    std::vector<Rat> a_;
};

// Solves A x = b; requires b in the column span (throws std::runtime_error otherwise).
std::vector<Rat> solve_in_span(const RatMatrix& a, const std::vector<Rat>& b);

}  // namespace meshforge
