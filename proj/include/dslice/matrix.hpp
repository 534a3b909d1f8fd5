#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "dslice/integer.hpp"

namespace dslice {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        for (const auto& row : init)
            for (long x : row) a_.emplace_back(x);
    }
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }
    friend bool operator<(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_) return x.rows_ < y.rows_;
        if (x.cols_ != y.cols_) return x.cols_ < y.cols_;
        return x.a_ < y.a_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& x) {
        Matrix r = x;
        for (auto& v : r.a_) v = -v;
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                if (x(i, k) == 0) continue;
                for (int j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& x) {
        Matrix r = x;
        for (auto& v : r.a_) v *= s;
        return r;
    }

    std::vector<std::vector<T>> to_rows() const {
        std::vector<std::vector<T>> out(rows_, std::vector<T>(cols_));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
        return out;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Fraction-free Gaussian elimination (Bareiss). Determinant of the empty matrix is 1.
Integer determinant(const IntMatrix& m);
RatMatrix to_rational(const IntMatrix& m);
/// Exact inverse over Q; throws InvalidInput when singular.
RatMatrix inverse(const RatMatrix& m);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// Smith normal form L * A * R = D with L, R unimodular; linv = L^{-1}.
struct SmithForm {
    IntMatrix d, l, linv, r;
    std::vector<Integer> diagonal;  // min(rows, cols) entries, non-negative, divisibility chain
};
SmithForm smith_normal_form(const IntMatrix& a);

/// Invariant factors and L^{-1} (entries reduced mod |det|) of a nonsingular square matrix.
struct ModularSmithForm {
    IntMatrix linv;
    std::vector<Integer> diagonal;
};
ModularSmithForm smith_normal_form_modular(const IntMatrix& a);

/// Column-style Hermite normal form of the lattice spanned by the columns of a
/// (full row rank assumed): upper triangular, positive diagonal, entries above
/// the diagonal reduced into [0, diag).
IntMatrix hermite_column_basis(const IntMatrix& a);

std::string to_string(const IntMatrix& m);

}  // namespace dslice
