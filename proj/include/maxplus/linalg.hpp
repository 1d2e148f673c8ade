// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "maxplus/errors.hpp"
#include "maxplus/extreal.hpp"

namespace maxplus {

struct ColumnTag {};
struct RowTag {};

/// Counts scalar (+, max, min) evaluations so algorithms can be compared
/// without timing. Pass nullptr where counting is not wanted.
struct OpCounter {
  std::uint64_t ops = 0;
};

namespace detail {
inline void tick(OpCounter* c, std::uint64_t k = 1) {
  if (c != nullptr) c->ops += k;
}
}  // namespace detail

/// Dense vector over Extended<T>. The tag keeps column vectors (points) and
/// row vectors (linear forms) from being mixed up by accident.
template <ScalarField T, class Tag>
class BasicVector {
 public:
  using scalar = Extended<T>;
  using value_type = scalar;
  using iterator = typename std::vector<scalar>::iterator;
  using const_iterator = typename std::vector<scalar>::const_iterator;

  explicit BasicVector(std::size_t n, scalar fill = scalar::neg_inf()) : data_(n, fill) {
    check_nonempty();
  }
  BasicVector(std::initializer_list<scalar> init) : data_(init) { check_nonempty(); }
  explicit BasicVector(std::vector<scalar> entries) : data_(std::move(entries)) { check_nonempty(); }

  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
  scalar& operator[](std::size_t i) { return data_[i]; }
  const scalar& operator[](std::size_t i) const { return data_[i]; }
  scalar& at(std::size_t i) { return data_.at(i); }
  [[nodiscard]] const scalar& at(std::size_t i) const { return data_.at(i); }

  iterator begin() { return data_.begin(); }
  iterator end() { return data_.end(); }
  const_iterator begin() const { return data_.begin(); }
  const_iterator end() const { return data_.end(); }
  [[nodiscard]] const std::vector<scalar>& entries() const noexcept { return data_; }

  friend bool operator==(const BasicVector&, const BasicVector&) = default;

 private:
  void check_nonempty() const {
    if (data_.empty()) throw DimensionError("vectors must have length at least 1");
  }

  std::vector<scalar> data_;
};

template <ScalarField T>
using Vector = BasicVector<T, ColumnTag>;
template <ScalarField T>
using RowVector = BasicVector<T, RowTag>;

template <ScalarField T>
RowVector<T> as_row(const Vector<T>& v) {
  return RowVector<T>(v.entries());
}
template <ScalarField T>
Vector<T> as_column(const RowVector<T>& v) {
  return Vector<T>(v.entries());
}

/// Row-major p x n matrix. p = 0 is allowed (an empty constraint list).
template <ScalarField T>
class Matrix {
 public:
  using scalar = Extended<T>;

  Matrix(std::size_t rows, std::size_t cols, scalar fill = scalar::neg_inf())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (cols == 0) throw DimensionError("matrices must have at least one column");
  }

  Matrix(std::initializer_list<std::initializer_list<scalar>> init) : rows_(init.size()) {
    if (rows_ == 0) throw DimensionError("use Matrix(0, n) for an empty matrix");
    cols_ = init.begin()->size();
    if (cols_ == 0) throw DimensionError("matrices must have at least one column");
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix from_rows(std::size_t cols, const std::vector<RowVector<T>>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionError("row length differs from column count");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] RowVector<T> row(std::size_t i) const {
    if (i >= rows_) throw DimensionError("row index out of range");
    return RowVector<T>(std::vector<scalar>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
  }

  [[nodiscard]] Vector<T> column(std::size_t j) const {
    if (j >= cols_) throw DimensionError("column index out of range");
    if (rows_ == 0) throw DimensionError("column of a matrix with no rows");
    Vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<scalar> data_;
};

namespace detail {
template <class X, class Y>
void require_same_size(const X& x, const Y& y, const char* what) {
  if (x.size() != y.size()) {
    throw DimensionError(std::string(what) + ": length " + std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()));
  }
}
}  // namespace detail

template <ScalarField T, class Tag>
BasicVector<T, Tag> oplus(const BasicVector<T, Tag>& x, const BasicVector<T, Tag>& y) {
  detail::require_same_size(x, y, "oplus");
  BasicVector<T, Tag> r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = max(x[i], y[i]);
  return r;
}

template <ScalarField T, class Tag>
BasicVector<T, Tag> meet(const BasicVector<T, Tag>& x, const BasicVector<T, Tag>& y) {
  detail::require_same_size(x, y, "meet");
  BasicVector<T, Tag> r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = min(x[i], y[i]);
  return r;
}

template <ScalarField T, class Tag>
BasicVector<T, Tag> scale(const BasicVector<T, Tag>& x, const Extended<T>& lam) {
  BasicVector<T, Tag> r = x;
  for (auto& e : r) e = lower_add(e, lam);
  return r;
}

/// Entrywise x <= y.
template <ScalarField T, class Tag>
bool leq(const BasicVector<T, Tag>& x, const BasicVector<T, Tag>& y) {
  detail::require_same_size(x, y, "leq");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] < x[i]) return false;
  }
  return true;
}

/// ah = max_i (a_i + h_i). Entries with a_i = -inf are skipped.
template <ScalarField T>
Extended<T> row_apply(const RowVector<T>& a, const Vector<T>& h, OpCounter* counter = nullptr) {
  detail::require_same_size(a, h, "row_apply");
  Extended<T> acc = Extended<T>::neg_inf();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_neg_inf()) continue;
    detail::tick(counter);
    acc = max(acc, lower_add(a[i], h[i]));
  }
  return acc;
}

template <ScalarField T>
Vector<T> mat_apply(const Matrix<T>& A, const Vector<T>& x, OpCounter* counter = nullptr) {
  if (A.cols() != x.size()) {
    throw DimensionError("mat_apply: matrix has " + std::to_string(A.cols()) +
                         " columns, vector has length " + std::to_string(x.size()));
  }
  if (A.rows() == 0) throw DimensionError("mat_apply: matrix has no rows");
  Vector<T> y(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Extended<T> acc = Extended<T>::neg_inf();
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (A(i, j).is_neg_inf()) continue;
      detail::tick(counter);
      acc = max(acc, lower_add(A(i, j), x[j]));
    }
    y[i] = acc;
  }
  return y;
}

/// x\y = min_i (x_i \ y_i), the largest lambda with x lambda <= y.
template <ScalarField T, class Tag>
Extended<T> residual(const BasicVector<T, Tag>& x, const BasicVector<T, Tag>& y) {
  detail::require_same_size(x, y, "residual");
  Extended<T> acc = Extended<T>::pos_inf();
  for (std::size_t i = 0; i < x.size(); ++i) acc = min(acc, scalar_residual(x[i], y[i]));
  return acc;
}

/// Column vector (b_j \ lam)_j; +inf where b_j = -inf.
template <ScalarField T>
Vector<T> row_preimage(const RowVector<T>& b, const Extended<T>& lam) {
  Vector<T> r(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) r[j] = scalar_residual(b[j], lam);
  return r;
}

/// B#y, the largest x with Bx <= y: (B#y)_j = min_i (-B_ij +' y_i).
template <ScalarField T>
Vector<T> residuated_apply(const Matrix<T>& B, const Vector<T>& y, OpCounter* counter = nullptr) {
  if (B.rows() != y.size()) {
    throw DimensionError("residuated_apply: matrix has " + std::to_string(B.rows()) +
                         " rows, vector has length " + std::to_string(y.size()));
  }
  Vector<T> x(B.cols(), Extended<T>::pos_inf());
  for (std::size_t i = 0; i < B.rows(); ++i) {
    for (std::size_t j = 0; j < B.cols(); ++j) {
      if (B(i, j).is_neg_inf()) continue;
      detail::tick(counter);
      x[j] = min(x[j], scalar_residual(B(i, j), y[i]));
    }
  }
  return x;
}

/// A\C for matrices, one residuated_apply per column of C.
template <ScalarField T>
Matrix<T> residual(const Matrix<T>& A, const Matrix<T>& C) {
  if (A.rows() != C.rows()) throw DimensionError("matrix residual: row counts differ");
  Matrix<T> R(A.cols(), C.cols());
  for (std::size_t k = 0; k < C.cols(); ++k) {
    Vector<T> col = residuated_apply(A, C.column(k));
    for (std::size_t j = 0; j < A.cols(); ++j) R(j, k) = col[j];
  }
  return R;
}

template <ScalarField T>
Matrix<T> mat_mul(const Matrix<T>& A, const Matrix<T>& C) {
  if (A.cols() != C.rows()) throw DimensionError("mat_mul: inner dimensions differ");
  Matrix<T> R(A.rows(), C.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t k = 0; k < C.cols(); ++k) {
      Extended<T> acc = Extended<T>::neg_inf();
      for (std::size_t j = 0; j < A.cols(); ++j) acc = max(acc, lower_add(A(i, j), C(j, k)));
      R(i, k) = acc;
    }
  }
  return R;
}

template <ScalarField T, class Tag>
bool has_pos_inf(const BasicVector<T, Tag>& x) {
  for (const auto& e : x) {
    if (e.is_pos_inf()) return true;
  }
  return false;
}

template <ScalarField T, class Tag>
bool all_neg_inf(const BasicVector<T, Tag>& x) {
  for (const auto& e : x) {
    if (!e.is_neg_inf()) return false;
  }
  return true;
}

template <ScalarField T, class Tag>
bool all_finite(const BasicVector<T, Tag>& x) {
  for (const auto& e : x) {
    if (!e.is_finite()) return false;
  }
  return true;
}

template <ScalarField T, class Tag>
std::string to_string(const BasicVector<T, Tag>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i != 0) s += ", ";
    s += to_token(x[i]);
  }
  return s + ")";
}

}  // namespace maxplus
