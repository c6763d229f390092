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

#include "mincone/linalg.hpp"

#include <utility>

namespace mincone {

namespace {

void require_same_dim(const RVector& a, const RVector& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

RVector RVector::unit(std::size_t dim, std::size_t index) {
  RVector v(dim);
  v[index] = 1;
  return v;
}

bool RVector::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

RVector RVector::operator-() const {
  RVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = -entries_[i];
  return out;
}

RVector& RVector::operator+=(const RVector& rhs) {
  require_same_dim(*this, rhs, "vector add");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += rhs[i];
  return *this;
}

RVector& RVector::operator-=(const RVector& rhs) {
  require_same_dim(*this, rhs, "vector subtract");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= rhs[i];
  return *this;
}

std::string RVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) out += ' ';
    out += entries_[i].to_string();
  }
  return out;
}

Rational dot(const RVector& a, const RVector& b) {
  require_same_dim(a, b, "dot");
  Rational sum;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    sum += a[i] * b[i];
  }
  return sum;
}

RVector add(const RVector& a, const RVector& b) { return a + b; }

RVector scale(const Rational& factor, const RVector& v) {
  RVector out(v.dim());
  if (factor.is_zero()) return out;
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = factor * v[i];
  return out;
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RMatrix RMatrix::from_columns(std::span<const RVector> columns, std::size_t rows) {
  RMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != rows) throw DimensionError("from_columns: column has wrong dimension");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RMatrix RMatrix::from_rows(std::span<const RVector> rows, std::size_t cols) {
  RMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != cols) throw DimensionError("from_rows: row has wrong dimension");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RVector RMatrix::row(std::size_t r) const {
  RVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

RVector RMatrix::column(std::size_t c) const {
  RVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RVector RMatrix::operator*(const RVector& x) const {
  if (x.dim() != cols_) throw DimensionError("matrix-vector product: dimension mismatch");
  RVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational sum;
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c).is_zero() || x[c].is_zero()) continue;
      sum += (*this)(r, c) * x[c];
    }
    out[r] = std::move(sum);
  }
  return out;
}

RMatrix RMatrix::operator*(const RMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product: dimension mismatch");
  RMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += (*this)(r, k) * rhs(k, c);
    }
  return out;
}

RrefResult rref(RMatrix m) {
  RrefResult result;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(pivot_row, c));
    }
    const Rational inv = Rational(1) / m(pivot_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(pivot_row, c).is_zero()) m(r, c) -= factor * m(pivot_row, c);
      }
    }
    result.pivot_columns.push_back(col);
    ++pivot_row;
  }
  result.matrix = std::move(m);
  return result;
}

std::vector<std::size_t> extract_basis(std::span<const RVector> vectors) {
  // Incremental echelon basis: each accepted row is scaled so its pivot
  // entry is 1 and every later candidate is reduced against all of them.
  struct EchelonRow {
    RVector row;
    std::size_t pivot;
  };
  std::vector<EchelonRow> echelon;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    RVector residual = vectors[i];
    if (!echelon.empty() && residual.dim() != echelon.front().row.dim()) {
      throw DimensionError("extract_basis: vectors differ in dimension");
    }
    for (const auto& e : echelon) {
      if (residual[e.pivot].is_zero()) continue;
      residual -= scale(residual[e.pivot], e.row);
    }
    std::size_t pivot = 0;
    while (pivot < residual.dim() && residual[pivot].is_zero()) ++pivot;
    if (pivot == residual.dim()) continue;
    residual = scale(Rational(1) / residual[pivot], residual);
    // Keep earlier rows reduced at the new pivot so reductions stay independent of order.
    for (auto& e : echelon) {
      if (!e.row[pivot].is_zero()) e.row -= scale(e.row[pivot], residual);
    }
    echelon.push_back({std::move(residual), pivot});
    chosen.push_back(i);
  }
  return chosen;
}

RVector solve(RMatrix a, RVector b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.dim() != n) throw DimensionError("solve: system is not square");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a(sel, col).is_zero()) ++sel;
    if (sel == n) throw std::domain_error("solve: singular matrix");
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(sel, c), a(col, c));
      std::swap(b[sel], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      b[r] -= factor * b[col];
    }
  }
  RVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a(i, c) * x[c];
    x[i] = acc / a(i, i);
  }
  return x;
}

RVector project_complement(const RVector& x, std::span<const RVector> basis) {
  if (basis.empty()) return x;
  const std::size_t k = basis.size();
  for (const auto& b : basis) require_same_dim(x, b, "project_complement");
  RMatrix gram(k, k);
  RVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(basis[i], x);
    for (std::size_t j = i; j < k; ++j) {
      gram(i, j) = dot(basis[i], basis[j]);
      gram(j, i) = gram(i, j);
    }
  }
  const RVector w = solve(std::move(gram), std::move(rhs));
  RVector out = x;
  for (std::size_t i = 0; i < k; ++i) {
    if (!w[i].is_zero()) out -= scale(w[i], basis[i]);
  }
  return out;
}

}  // namespace mincone
