/*
   Copyright 2026 The cremona Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cremona/arith/field.hpp"
#include "cremona/errors.hpp"

namespace cremona::geometry {

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

/// Dense row-major matrix over a scalar type.
template <class S>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const S& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  template <arith::ScalarField F>
  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(n, n, field.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<S> column(std::size_t j) const {
    std::vector<S> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  void set_column(std::size_t j, const std::vector<S>& c) {
    if (c.size() != rows_) throw InvalidInput("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  /// Entrywise conversion, e.g. from Q(δ) into floating point.
  template <class Fn>
  auto map(Fn&& fn) const -> Matrix<decltype(fn(std::declval<const S&>()))> {
    using T = decltype(fn(std::declval<const S&>()));
    std::vector<T> out;
    out.reserve(data_.size());
    for (const auto& v : data_) out.push_back(fn(v));
    return Matrix<T>(rows_, cols_, std::move(out));
  }

  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw InvalidInput("matrix data size mismatch");
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product dimension mismatch");
    Matrix r(a.rows_, b.cols_, a(0, 0) - a(0, 0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l)
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, l) * b(l, j);
    return r;
  }

  friend std::vector<S> operator*(const Matrix& a, const std::vector<S>& v) {
    if (a.cols_ != v.size()) throw InvalidInput("matrix-vector dimension mismatch");
    std::vector<S> r;
    r.reserve(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      S acc = a(i, 0) * v[0];
      for (std::size_t j = 1; j < a.cols_; ++j) acc += a(i, j) * v[j];
      r.push_back(std::move(acc));
    }
    return r;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<S> data_;
};

namespace detail {

/// Forward elimination with the field's pivot rule; returns the determinant.
/// `rhs` columns are carried along.
template <arith::ScalarField F>
typename F::Scalar eliminate(const F& field, Matrix<typename F::Scalar>& a,
                             Matrix<typename F::Scalar>* rhs) {
  using S = typename F::Scalar;
  const std::size_t n = a.rows();
  if (a.cols() != n) throw InvalidInput("square matrix required");
  S det = field.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (field.better_pivot(a(r, c), a(piv, c))) piv = r;
    if (field.is_zero(a(piv, c))) return field.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
      if (rhs)
        for (std::size_t j = 0; j < rhs->cols(); ++j) std::swap((*rhs)(c, j), (*rhs)(piv, j));
      det = -det;
    }
    det *= a(c, c);
    const S inv = field.one() / a(c, c);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || field.is_zero(a(r, c))) continue;
      const S factor = a(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(r, j) -= factor * a(c, j);
      if (rhs)
        for (std::size_t j = 0; j < rhs->cols(); ++j) (*rhs)(r, j) -= factor * (*rhs)(c, j);
    }
  }
  if (rhs)
    for (std::size_t r = 0; r < n; ++r) {
      const S inv = field.one() / a(r, r);
      for (std::size_t j = 0; j < rhs->cols(); ++j) (*rhs)(r, j) *= inv;
    }
  return det;
}

}  // namespace detail

template <arith::ScalarField F>
typename F::Scalar determinant(const F& field, Matrix<typename F::Scalar> a) {
  return detail::eliminate(field, a, nullptr);
}

/// Throws SingularMatrix.
template <arith::ScalarField F>
Matrix<typename F::Scalar> inverse(const F& field, Matrix<typename F::Scalar> a) {
  auto id = Matrix<typename F::Scalar>::identity(field, a.rows());
  if (field.is_zero(detail::eliminate(field, a, &id))) throw SingularMatrix();
  return id;
}

/// Solves a·x = b. Throws SingularMatrix.
template <arith::ScalarField F>
std::vector<typename F::Scalar> solve(const F& field, Matrix<typename F::Scalar> a,
                                      const std::vector<typename F::Scalar>& b) {
  Matrix<typename F::Scalar> rhs(b.size(), 1, b);
  if (field.is_zero(detail::eliminate(field, a, &rhs))) throw SingularMatrix();
  return rhs.column(0);
}

/// An invertible matrix; invertibility is checked on construction.
template <class S>
class LinearMap {
 public:
  template <arith::ScalarField F>
  LinearMap(const F& field, Matrix<S> m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw InvalidInput("linear map needs a square matrix");
    if (field.is_zero(determinant(field, m_))) throw SingularMatrix();
  }

  const Matrix<S>& matrix() const { return m_; }
  std::size_t dimension() const { return m_.rows(); }

 private:
  Matrix<S> m_;
};

}  // namespace cremona::geometry
