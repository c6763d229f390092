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

#include "mincone/lpfeas.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mincone {

FeasibilitySystem::FeasibilitySystem(RMatrix a_, RVector c_) : a(std::move(a_)), c(std::move(c_)) {
  if (a.rows() != c.dim()) {
    throw DimensionError("feasibility system: A has " + std::to_string(a.rows()) +
                         " rows but c has dimension " + std::to_string(c.dim()));
  }
}

namespace {

// Dense phase-1 tableau for { D A y + s = D c, y, s >= 0 } where D flips the
// sign of every row with c_i < 0 and s are the artificial variables.
// Columns 0..m-1 are structural, m..m+n-1 artificial.
class Phase1Tableau {
 public:
  explicit Phase1Tableau(const FeasibilitySystem& sys)
      : rows_(sys.a.rows()),
        structural_(sys.a.cols()),
        cols_(structural_ + rows_),
        body_(rows_, cols_),
        rhs_(rows_),
        reduced_(cols_),
        basis_(rows_),
        flipped_(rows_, false) {
    for (std::size_t i = 0; i < rows_; ++i) {
      flipped_[i] = sys.c[i].sign() < 0;
      const Rational sign = flipped_[i] ? Rational(-1) : Rational(1);
      for (std::size_t j = 0; j < structural_; ++j) body_(i, j) = sign * sys.a(i, j);
      body_(i, structural_ + i) = 1;
      rhs_[i] = sign * sys.c[i];
      basis_[i] = structural_ + i;
    }
    // Reduced costs of the artificial objective: r_j = cost_j - sum_i T(i, j).
    for (std::size_t j = 0; j < structural_; ++j) {
      Rational sum;
      for (std::size_t i = 0; i < rows_; ++i) sum += body_(i, j);
      reduced_[j] = -sum;
    }
  }

  void run() {
    while (auto entering = choose_entering()) {
      const auto leaving = choose_leaving(*entering);
      // Phase-1 objective is bounded below by zero, so a ratio always exists.
      if (!leaving) throw InternalError("phase-1 simplex reported an unbounded ray");
      pivot(*leaving, *entering);
    }
  }

  Rational objective() const {
    Rational w;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] >= structural_) w += rhs_[i];
    }
    return w;
  }

  RVector primal() const {
    RVector y(structural_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) y[basis_[i]] = rhs_[i];
    }
    return y;
  }

  // Optimal phase-1 duals u (u_i = 1 - reduced cost of artificial i), mapped
  // back through the row flips: z = D u.
  RVector farkas() const {
    RVector z(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rational u = Rational(1) - reduced_[structural_ + i];
      z[i] = flipped_[i] ? -u : u;
    }
    return z;
  }

 private:
  // Bland: lowest-index column with a negative reduced cost.
  std::optional<std::size_t> choose_entering() const {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (reduced_[j].sign() < 0) return j;
    }
    return std::nullopt;
  }

  // Minimum ratio test; ties go to the row whose basic variable has the
  // lowest index.
  std::optional<std::size_t> choose_leaving(std::size_t col) const {
    std::optional<std::size_t> best;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (body_(i, col).sign() <= 0) continue;
      Rational ratio = rhs_[i] / body_(i, col);
      if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*best])) {
        best = i;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / body_(row, col);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!body_(row, j).is_zero()) body_(row, j) *= inv;
    }
    rhs_[row] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || body_(i, col).is_zero()) continue;
      const Rational factor = body_(i, col);
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!body_(row, j).is_zero()) body_(i, j) -= factor * body_(row, j);
      }
      rhs_[i] -= factor * rhs_[row];
    }
    if (!reduced_[col].is_zero()) {
      const Rational factor = reduced_[col];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!body_(row, j).is_zero()) reduced_[j] -= factor * body_(row, j);
      }
    }
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t structural_;
  std::size_t cols_;
  RMatrix body_;
  RVector rhs_;
  RVector reduced_;
  std::vector<std::size_t> basis_;
  std::vector<bool> flipped_;
};

}  // namespace

FeasibilityResult solve_feasibility(const FeasibilitySystem& sys) {
  Phase1Tableau tableau(sys);
  tableau.run();
  FeasibilityResult result;
  if (tableau.objective().is_zero()) {
    result = Feasible{tableau.primal()};
  } else {
    result = Infeasible{tableau.farkas()};
  }
  if (!verify_certificate(sys, result)) {
    throw InternalError(std::holds_alternative<Feasible>(result)
                            ? "simplex produced a feasible point that fails substitution"
                            : "simplex produced a Farkas witness that fails verification");
  }
  return result;
}

bool verify_certificate(const FeasibilitySystem& sys, const FeasibilityResult& res) {
  if (const auto* f = std::get_if<Feasible>(&res)) {
    if (f->y.dim() != sys.a.cols()) throw DimensionError("feasible certificate has wrong dimension");
    for (std::size_t j = 0; j < f->y.dim(); ++j) {
      if (f->y[j].sign() < 0) return false;
    }
    return sys.a * f->y == sys.c;
  }
  const auto& inf = std::get<Infeasible>(res);
  if (inf.z.dim() != sys.a.rows()) throw DimensionError("Farkas certificate has wrong dimension");
  if (dot(sys.c, inf.z).sign() <= 0) return false;
  for (std::size_t j = 0; j < sys.a.cols(); ++j) {
    Rational col_dot;
    for (std::size_t i = 0; i < sys.a.rows(); ++i) {
      if (!sys.a(i, j).is_zero() && !inf.z[i].is_zero()) col_dot += sys.a(i, j) * inf.z[i];
    }
    if (col_dot.sign() > 0) return false;
  }
  return true;
}

}  // namespace mincone
