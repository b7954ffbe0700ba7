// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "bcf/error.hpp"
#include "bcf/number.hpp"

namespace bcf {

/// Small dense row-major matrix over an exact field.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Leading principal k x k block.
  Matrix leading(std::size_t k) const {
    Matrix b(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) b(i, j) = (*this)(i, j);
    return b;
  }

  bool symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

namespace detail {

// Bareiss fraction-free elimination with row pivoting. Returns the rank and,
// for square input, the determinant.
template <class T>
std::pair<std::size_t, T> bareiss(Matrix<T> a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  T prev(1);
  T sign(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && is_zero(a(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a(i, j) = (a(rank, col) * a(i, j) - a(i, col) * a(rank, j)) / prev;
      }
      a(i, col) = T(0);
    }
    prev = a(rank, col);
    ++rank;
  }
  T det(0);
  if (a.square() && rank == rows) det = rows == 0 ? T(1) : T(sign * prev);
  return {rank, det};
}

}  // namespace detail

/// Exact rank over the field, by fraction-free elimination.
template <class T>
std::size_t rank_exact(const Matrix<T>& a) {
  return detail::bareiss(a).first;
}

template <class T>
T determinant(const Matrix<T>& a) {
  if (!a.square()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  return detail::bareiss(a).second;
}

/// Solves a x = b exactly; nullopt when a is singular.
template <class T>
std::optional<std::vector<T>> solve_linear(Matrix<T> a, std::vector<T> b) {
  const std::size_t n = a.rows();
  if (!a.square() || b.size() != n) throw Error(ErrorCode::InvalidArgument, "solve_linear shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(a(pivot, col))) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(a(i, col))) continue;
      T factor = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
      b[i] -= factor * b[col];
    }
  }
  std::vector<T> x(n, T(0));
  for (std::size_t k = n; k-- > 0;) {
    T acc = b[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= a(k, j) * x[j];
    x[k] = acc / a(k, k);
  }
  return x;
}

}  // namespace bcf
