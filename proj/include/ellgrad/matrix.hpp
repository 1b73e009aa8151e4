#pragma once

#include "ellgrad/gaussian.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ellgrad {

/// Dense matrix over an exact field (Rat or GRat). Row-major, 0-based.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        a.check_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        a.check_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (ellgrad::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const F& bkj = b(k, j);
                    if (!ellgrad::is_zero(bkj)) r(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend Matrix operator*(const F& s, const Matrix& a)
    {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = s * a.data_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a) { return F(-1) * a; }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const
    {
        for (const auto& v : data_)
            if (!ellgrad::is_zero(v)) return false;
        return true;
    }

    Matrix conjugate_transpose() const
    {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = conj((*this)(i, j));
        return r;
    }

    Matrix add_scalar_diag(const F& s) const
    {
        if (rows_ != cols_) throw std::invalid_argument("diag shift needs square matrix");
        Matrix r = *this;
        for (std::size_t i = 0; i < rows_; ++i) r(i, i) += s;
        return r;
    }

    F trace() const
    {
        if (rows_ != cols_) throw std::invalid_argument("trace needs square matrix");
        F t{};
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    /// Row echelon form in place; returns the rank and records pivot columns.
    std::size_t echelonize(std::vector<std::size_t>* pivot_cols = nullptr)
    {
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t piv = rank;
            while (piv < rows_ && ellgrad::is_zero((*this)(piv, col))) ++piv;
            if (piv == rows_) continue;
            if (piv != rank)
                for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(rank, j));
            const F inv = F(1) / (*this)(rank, col);
            for (std::size_t j = col; j < cols_; ++j) (*this)(rank, j) = inv * (*this)(rank, j);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == rank || ellgrad::is_zero((*this)(i, col))) continue;
                const F f = (*this)(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    (*this)(i, j) = (*this)(i, j) - f * (*this)(rank, j);
            }
            if (pivot_cols) pivot_cols->push_back(col);
            ++rank;
        }
        return rank;
    }

    std::size_t rank() const
    {
        Matrix copy = *this;
        return copy.echelonize();
    }

    /// Columns span the kernel; empty (cols()==0) when the kernel is trivial.
    Matrix kernel_basis() const
    {
        Matrix rref = *this;
        std::vector<std::size_t> pivots;
        const std::size_t r = rref.echelonize(&pivots);
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        Matrix ker(cols_, cols_ - r);
        std::size_t kcol = 0;
        for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
            if (is_pivot[free_col]) continue;
            ker(free_col, kcol) = F(1);
            for (std::size_t i = 0; i < r; ++i) ker(pivots[i], kcol) = -rref(i, free_col);
            ++kcol;
        }
        return ker;
    }

private:
    void check_same_shape(const Matrix& b) const
    {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

using RMat = Matrix<Rat>;
using GMat = Matrix<GRat>;

/// Solves the square system A x = b exactly. Returns false when A is singular.
template <class F>
bool solve_square(Matrix<F> a, std::vector<F> b, std::vector<F>& x)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_square shape mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(a(piv, col))) ++piv;
        if (piv == n) return false;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            std::swap(b[piv], b[col]);
        }
        const F inv = F(1) / a(col, col);
        for (std::size_t j = col; j < n; ++j) a(col, j) = inv * a(col, j);
        b[col] = inv * b[col];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || is_zero(a(i, col))) continue;
            const F f = a(i, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) = a(i, j) - f * a(col, j);
            b[i] = b[i] - f * b[col];
        }
    }
    x = std::move(b);
    return true;
}

/// Monic characteristic polynomial det(xI - A) by Faddeev-LeVerrier.
/// Returns coefficients c[0..n] with c[n]=1, p(x) = sum c[k] x^k.
template <class F>
std::vector<F> charpoly(const Matrix<F>& a)
{
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("charpoly needs square matrix");
    std::vector<F> c(n + 1);
    c[n] = F(1);
    Matrix<F> m = Matrix<F>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        F t = m.trace();
        F ck = -(F(1) / F(static_cast<int>(k))) * t;
        c[n - k] = ck;
        m = m.add_scalar_diag(ck);
    }
    return c;
}

}  // namespace ellgrad
