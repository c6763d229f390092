// Copyright 2026 The mincone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MINCONE_LINALG_HPP
#define MINCONE_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mincone/rational.hpp"

namespace mincone {

/// Raised when operands disagree on dimension.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense vector of exact rationals with a fixed dimension.
class RVector {
 public:
  RVector() = default;
  explicit RVector(std::size_t dim) : entries_(dim) {}
  explicit RVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  RVector(std::initializer_list<Rational> entries) : entries_(entries) {}

  static RVector zero(std::size_t dim) { return RVector(dim); }
  /// Standard basis vector e_{index} (0-based).
  static RVector unit(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Rational> entries() const { return entries_; }

  bool is_zero() const;

  RVector operator-() const;
  RVector& operator+=(const RVector& rhs);
  RVector& operator-=(const RVector& rhs);
  friend RVector operator+(RVector lhs, const RVector& rhs) { return lhs += rhs; }
  friend RVector operator-(RVector lhs, const RVector& rhs) { return lhs -= rhs; }

  friend bool operator==(const RVector&, const RVector&) = default;

  /// Entries as canonical rational text joined by single spaces.
  std::string to_string() const;

 private:
  std::vector<Rational> entries_;
};

Rational dot(const RVector& a, const RVector& b);
RVector add(const RVector& a, const RVector& b);
RVector scale(const Rational& factor, const RVector& v);

/// Dense row-major rational matrix.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RMatrix identity(std::size_t n);
  /// Matrix whose j-th column is `columns[j]`; `rows` fixes the height when
  /// `columns` is empty.
  static RMatrix from_columns(std::span<const RVector> columns, std::size_t rows);
  static RMatrix from_rows(std::span<const RVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  RVector row(std::size_t r) const;
  RVector column(std::size_t c) const;
  RMatrix transpose() const;

  /// Matrix-vector product.
  RVector operator*(const RVector& x) const;
  RMatrix operator*(const RMatrix& rhs) const;

  friend bool operator==(const RMatrix&, const RMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  RMatrix matrix;
  std::vector<std::size_t> pivot_columns;  // ascending

  std::size_t rank() const { return pivot_columns.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination over the rationals.
RrefResult rref(RMatrix m);

/// Indices of the lexicographically first maximal linearly independent
/// subset of `vectors` (greedy by ascending index).
std::vector<std::size_t> extract_basis(std::span<const RVector> vectors);

/// Solves the square system `a x = b` exactly. Throws std::domain_error if
/// `a` is singular.
RVector solve(RMatrix a, RVector b);

/// Orthogonal projection of `x` onto the complement of span(basis):
/// x - M (M^T M)^{-1} M^T x with the basis vectors as the columns of M.
/// `basis` must be linearly independent; a singular Gram matrix throws
/// std::domain_error.
RVector project_complement(const RVector& x, std::span<const RVector> basis);

}  // namespace mincone

#endif  // MINCONE_LINALG_HPP
