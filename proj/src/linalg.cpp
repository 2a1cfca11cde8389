#include "meshforge/linalg.hpp"

#include <stdexcept>

namespace meshforge {

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rat& scale_b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rat c = b[j].second * scale_b;
            if (c != 0) out.emplace_back(b[j].first, std::move(c));
            ++j;
        } else {
            Rat c = a[i].second + b[j].second * scale_b;
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i, ++j;
        }
    }
    return out;
}

void sparse_normalize(SparseVec& v) {
    if (v.empty()) return;
    Rat lead = v.front().second;
    for (auto& [c, x] : v) x /= lead;
}

SparseVec RowEchelon::reduce(SparseVec v) const {
    // Rows are fully back-substituted, so each elimination removes one pivot
    // column and introduces only non-pivot columns.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k < v.size(); ++k) {
            auto it = pivot_of_col_.find(v[k].first);
            if (it != pivot_of_col_.end()) {
                Rat c = -v[k].second;
                v = sparse_add(v, rows_[it->second], c);
                changed = true;
                break;
            }
        }
    }
    return v;
}

SparseVec RowEchelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return v;
    sparse_normalize(v);
    int pivot = v.front().first;
    // Back-substitute the new pivot into existing rows.
    for (auto& row : rows_) {
        for (size_t k = 0; k < row.size(); ++k) {
            if (row[k].first == pivot) {
                Rat c = -row[k].second;
                row = sparse_add(row, v, c);
                break;
            }
            if (row[k].first > pivot) break;
        }
    }
    rows_.push_back(v);
    pivot_of_col_[pivot] = rows_.size() - 1;
    return v;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

RatMatrix RatMatrix::identity(size_t n) {
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::multiply(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw std::runtime_error("matrix shape mismatch");
    RatMatrix out(rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < other.cols_; ++j) {
                const Rat& y = other.at(k, j);
                if (y != 0) out.at(i, j) += x * y;
            }
        }
    return out;
}

namespace {

// Gauss-Jordan; returns pivot column per row and the reduced copy.
struct Rref {
    RatMatrix m;
    std::vector<int> pivot_cols;  // one per pivot row
};

Rref rref(RatMatrix m) {
    Rref out{std::move(m), {}};
    RatMatrix& a = out.m;
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        size_t p = r;
        while (p < a.rows() && a.at(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
        Rat lead = a.at(r, c);
        for (size_t j = 0; j < a.cols(); ++j) a.at(r, j) /= lead;
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (size_t j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        out.pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    return out;
}

}  // namespace

size_t RatMatrix::rank() const {
    return rref(*this).pivot_cols.size();
}

RatMatrix RatMatrix::kernel_basis() const {
    Rref r = rref(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(static_cast<int>(c));
    RatMatrix k(cols_, free_cols.size());
    for (size_t f = 0; f < free_cols.size(); ++f) {
        int fc = free_cols[f];
        k.at(fc, f) = 1;
        for (size_t row = 0; row < r.pivot_cols.size(); ++row)
            k.at(r.pivot_cols[row], f) = -r.m.at(row, fc);
    }
    return k;
}

std::vector<Rat> solve_in_span(const RatMatrix& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows()) throw std::runtime_error("solve_in_span: shape mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Rref r = rref(std::move(aug));
    std::vector<Rat> x(a.cols());
    for (size_t row = 0; row < r.pivot_cols.size(); ++row) {
        int c = r.pivot_cols[row];
        if (static_cast<size_t>(c) == a.cols())
            throw std::runtime_error("solve_in_span: rhs not in column span");
        x[c] = r.m.at(row, a.cols());
    }
    return x;
}

}  // namespace meshforge
