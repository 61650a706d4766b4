#pragma once

#include "heckeaf/error.hpp"
#include "heckeaf/exactnum/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace heckeaf {

/// Dense row-major matrix over an exact ring (Integer or Rational).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init);
    static Matrix from_rows(const std::vector<std::vector<T>>& rows);
    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const;
    std::vector<std::vector<T>> to_rows() const;
    Matrix transpose() const;
    bool is_identity() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

template <class T>
std::vector<std::vector<T>> Matrix<T>::to_rows() const {
    std::vector<std::vector<T>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

template <class T>
bool Matrix<T>::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "matrix product dimensions");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    }
    return c;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "matrix sum");
    Matrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    }
    return c;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "matrix difference");
    Matrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    }
    return c;
}

template <class T>
Matrix<T> scale(const T& s, const Matrix<T>& a) {
    Matrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    }
    return c;
}

template <class T>
Matrix<T> power(const Matrix<T>& a, unsigned k) {
    if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "power of non-square matrix");
    Matrix<T> result = Matrix<T>::identity(a.rows());
    Matrix<T> base = a;
    while (k) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k) base = base * base;
    }
    return result;
}

template <class T>
T trace(const Matrix<T>& a) {
    T t = 0;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
    return t;
}

RatMatrix to_rational(const IntMatrix& a);
/// Throws PreconditionViolated if some entry is not an integer.
IntMatrix to_integer(const RatMatrix& a);

Rational determinant(const RatMatrix& a);
/// Fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);
std::size_t rank(const RatMatrix& a);
/// Throws DivisionByZero for singular input.
RatMatrix inverse(const RatMatrix& a);
/// Inverse of a unimodular integer matrix; throws PreconditionViolated otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);
/// Solves x * a = b for the row vector x (a square, invertible).
std::vector<Rational> solve_left(const RatMatrix& a, const std::vector<Rational>& b);
/// Basis of {x : a x = 0} over Q, one vector per free column.
std::vector<std::vector<Rational>> right_nullspace(const RatMatrix& a);

/// det(x I - a), monic of degree n (Faddeev-LeVerrier).
Polynomial characteristic_polynomial(const RatMatrix& a);
IntPolynomial characteristic_polynomial(const IntMatrix& a);

bool is_nonnegative(const IntMatrix& a);

/// "[[0, 1], [1, 1]]"
std::string to_string(const IntMatrix& a);
std::string to_string(const RatMatrix& a);

}  // namespace heckeaf
