#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gaussian.hpp"
#include "rational.hpp"

namespace qpair {

/// Dense matrix over an exact field (Rational or GaussianRational).
/// All elimination results are canonical: reduced row echelon form is
/// unique, so pivot-selection heuristics affect speed only.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const {
        return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }
    void set_row(std::size_t r, const std::vector<T>& v) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw internal_error("matrix product shape mismatch");
        Matrix p(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(r, k);
                if (a.is_zero()) continue;
                for (std::size_t c = 0; c < o.cols_; ++c) {
                    const T& b = o(k, c);
                    if (!b.is_zero()) p(r, c) += a * b;
                }
            }
        return p;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix sum shape mismatch");
        Matrix s(rows_, cols_);
        for (std::size_t t = 0; t < data_.size(); ++t) s.data_[t] = data_[t] + o.data_[t];
        return s;
    }
    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix diff shape mismatch");
        Matrix s(rows_, cols_);
        for (std::size_t t = 0; t < data_.size(); ++t) s.data_[t] = data_[t] - o.data_[t];
        return s;
    }
    Matrix operator-() const {
        Matrix s(rows_, cols_);
        for (std::size_t t = 0; t < data_.size(); ++t) s.data_[t] = -data_[t];
        return s;
    }
    Matrix scaled(const T& a) const {
        Matrix s(rows_, cols_);
        for (std::size_t t = 0; t < data_.size(); ++t) s.data_[t] = data_[t] * a;
        return s;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw internal_error("matrix apply shape mismatch");
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    bool is_zero() const {
        for (const T& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_ && a.rows_ != 0 && b.rows_ != 0)
            throw internal_error("vstack shape mismatch");
        std::size_t cols = a.rows_ ? a.cols_ : b.cols_;
        Matrix s(a.rows_ + b.rows_, cols);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t c = 0; c < cols; ++c) s(r, c) = a(r, c);
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < cols; ++c) s(a.rows_ + r, c) = b(r, c);
        return s;
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw internal_error("hstack shape mismatch");
        Matrix s(a.rows_, a.cols_ + b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t c = 0; c < a.cols_; ++c) s(r, c) = a(r, c);
            for (std::size_t c = 0; c < b.cols_; ++c) s(r, a.cols_ + c) = b(r, c);
        }
        return s;
    }

    /// Reduce to reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> rref_in_place() {
        std::vector<std::size_t> pivots;
        std::size_t lead = 0;
        for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
            // pick the nonzero candidate with the smallest operands
            std::size_t best = rows_;
            std::size_t best_size = 0;
            for (std::size_t r = lead; r < rows_; ++r) {
                const T& x = (*this)(r, c);
                if (x.is_zero()) continue;
                std::size_t sz = x.bit_size();
                if (best == rows_ || sz < best_size) { best = r; best_size = sz; }
            }
            if (best == rows_) continue;
            swap_rows(lead, best);
            T inv = (*this)(lead, c).inverse();
            for (std::size_t cc = c; cc < cols_; ++cc) (*this)(lead, cc) = (*this)(lead, cc) * inv;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == lead) continue;
                const T f = (*this)(r, c);
                if (f.is_zero()) continue;
                for (std::size_t cc = c; cc < cols_; ++cc)
                    (*this)(r, cc) = (*this)(r, cc) - f * (*this)(lead, cc);
            }
            pivots.push_back(c);
            ++lead;
        }
        return pivots;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using MatrixQ = Matrix<Rational>;
using MatrixG = Matrix<GaussianRational>;

template <class T>
std::size_t rank(const Matrix<T>& m) {
    Matrix<T> w = m;
    return w.rref_in_place().size();
}

/// Canonical kernel basis from the RREF: one vector per free column f, with
/// 1 at f and the negated pivot-row entries at the pivot columns.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
    Matrix<T> w = m;
    std::vector<std::size_t> pivots = w.rref_in_place();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(m.cols());
        v[f] = T(1);
        for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -w(p, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Canonical basis of the row space: nonzero RREF rows.
template <class T>
Matrix<T> row_space_basis(const Matrix<T>& m) {
    Matrix<T> w = m;
    std::size_t r = w.rref_in_place().size();
    Matrix<T> b(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) b(i, c) = w(i, c);
    return b;
}

template <class T>
Matrix<T> subspace_sum(const Matrix<T>& a, const Matrix<T>& b) {
    return row_space_basis(Matrix<T>::vstack(a, b));
}

/// Intersection of the row spaces of a and b, as a canonical row basis.
/// Solves x a = y b via the kernel of [a^T | -b^T].
template <class T>
Matrix<T> subspace_intersection(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() == 0 || b.rows() == 0) {
        std::size_t n = a.rows() ? a.cols() : b.cols();
        return Matrix<T>(0, n);
    }
    if (a.cols() != b.cols()) throw internal_error("intersection shape mismatch");
    Matrix<T> m = Matrix<T>::hstack(a.transpose(), -b.transpose());
    auto ker = kernel_basis(m);
    Matrix<T> span(ker.size(), a.cols());
    for (std::size_t v = 0; v < ker.size(); ++v)
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c) {
                if (!ker[v][r].is_zero() && !a(r, c).is_zero())
                    span(v, c) += ker[v][r] * a(r, c);
            }
    return row_space_basis(span);
}

template <class T>
bool subspace_contains(const Matrix<T>& space, const std::vector<T>& v) {
    Matrix<T> row(1, v.size());
    row.set_row(0, v);
    return rank(Matrix<T>::vstack(space, row)) == rank(space);
}

template <class T>
bool subspace_contains_all(const Matrix<T>& space, const Matrix<T>& other) {
    if (other.rows() == 0) return true;
    return rank(Matrix<T>::vstack(space, other)) == rank(space);
}

template <class T>
bool subspaces_equal(const Matrix<T>& a, const Matrix<T>& b) {
    return row_space_basis(a) == row_space_basis(b);
}

/// Inverse via [m | I] -> [I | m^-1]; throws domain_error when singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw domain_error("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix<T> aug = Matrix<T>::hstack(m, Matrix<T>::identity(n));
    auto pivots = aug.rref_in_place();
    if (pivots.size() != n || pivots.back() != n - 1)
        throw domain_error("matrix not invertible");
    Matrix<T> inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

inline MatrixG complexify(const MatrixQ& m) {
    MatrixG g(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) g(r, c) = GaussianRational(m(r, c));
    return g;
}

inline MatrixG conj(const MatrixG& m) {
    MatrixG g(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) g(r, c) = m(r, c).conj();
    return g;
}

/// Real and imaginary parts, stacked: the real row space spanned by
/// re(v), im(v) over all rows v.
inline MatrixQ realify_rows(const MatrixG& m) {
    MatrixQ out(2 * m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(2 * r, c) = m(r, c).re;
            out(2 * r + 1, c) = m(r, c).im;
        }
    return out;
}

}  // namespace qpair
