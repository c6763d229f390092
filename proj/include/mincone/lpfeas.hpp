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

#ifndef MINCONE_LPFEAS_HPP
#define MINCONE_LPFEAS_HPP

#include <stdexcept>
#include <variant>

#include "mincone/linalg.hpp"

namespace mincone {

/// The system { A y = c, y >= 0 }. Columns of A are the generators.
struct FeasibilitySystem {
  RMatrix a;
  RVector c;

  FeasibilitySystem(RMatrix a_, RVector c_);
};

/// y >= 0 with A y = c.
struct Feasible {
  RVector y;
};

/// Farkas witness: A^T z <= 0 componentwise and c^T z > 0.
struct Infeasible {
  RVector z;
};

using FeasibilityResult = std::variant<Feasible, Infeasible>;

/// Thrown when the solver produces a certificate that fails its own exact
/// check. Never expected; signals a bug rather than a property of the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Decides feasibility with an exact phase-1 simplex (Bland's rule).
/// The returned certificate has been checked with verify_certificate.
FeasibilityResult solve_feasibility(const FeasibilitySystem& sys);

/// Exact check of either certificate branch against `sys`. Does not trust
/// the solver. Throws DimensionError when the certificate has the wrong size.
bool verify_certificate(const FeasibilitySystem& sys, const FeasibilityResult& res);

}  // namespace mincone

#endif  // MINCONE_LPFEAS_HPP
