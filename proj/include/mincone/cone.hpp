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

#ifndef MINCONE_CONE_HPP
#define MINCONE_CONE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mincone/linalg.hpp"
#include "mincone/lpfeas.hpp"

namespace mincone {

using IndexSet = std::vector<std::size_t>;

/// Ordered list of generators of a finitely generated cone. Order matters:
/// it drives the deterministic traces of reduce_ci and minimize.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
  GeneratorSet(std::size_t ambient_dim, std::vector<RVector> vectors);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const RVector& operator[](std::size_t i) const { return vectors_[i]; }
  std::span<const RVector> vectors() const { return vectors_; }

  void push_back(RVector v);

  /// The generators at `indices`, in the given order.
  GeneratorSet subset(std::span<const std::size_t> indices) const;
  /// All generators except the one at `index`.
  GeneratorSet without(std::size_t index) const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<RVector> vectors_;
};

/// Nonnegative coefficients keyed by generator index; zero coefficients are
/// omitted.
struct MembershipCertificate {
  std::map<std::size_t, Rational> coefficients;

  /// Sum of coefficient * generator.
  RVector combine(const GeneratorSet& s) const;
};

/// Full answer of a membership query: a certificate for c in cone(S), or a
/// Farkas witness z with <s, z> <= 0 for all s in S and <c, z> > 0.
struct MembershipAnswer {
  std::optional<MembershipCertificate> certificate;
  std::optional<RVector> farkas;

  bool is_member() const { return certificate.has_value(); }
};

/// Decides c in cone(S) with an exact LP and returns the checked certificate.
MembershipAnswer check_membership(const RVector& c, const GeneratorSet& s);

/// Some(lambda) iff c in cone(S).
std::optional<MembershipCertificate> member(const RVector& c, const GeneratorSet& s);

/// Running totals over every membership query in the process. Each answer is
/// re-verified by exact substitution or Farkas inequalities before it is
/// counted as verified.
struct MembershipAudit {
  std::uint64_t queries = 0;
  std::uint64_t verified = 0;
  std::uint64_t members = 0;
  std::uint64_t non_members = 0;
};

MembershipAudit membership_audit();
void reset_membership_audit();

/// One removal made by reduce_ci: generator `index` was found in the cone of
/// the generators still present at that step.
struct Removal {
  std::size_t index;
  MembershipCertificate certificate;
};

struct Reduction {
  IndexSet kept;
  std::vector<Removal> removed;
};

/// Conically independent sub-generator, scanning indices in ascending order
/// and dropping each generator that lies in the cone of the remaining ones.
Reduction reduce_ci_trace(const GeneratorSet& s);
GeneratorSet reduce_ci(const GeneratorSet& s);

/// Indices i with -s_i in cone(S). `jobs` > 1 spreads the membership tests
/// over worker threads; the result does not depend on it.
IndexSet lineal_part(const GeneratorSet& s, unsigned jobs = 1);

/// True iff the lineality space of cone(S) is {0}.
bool is_pointed(const GeneratorSet& s, unsigned jobs = 1);

struct ConeDecomposition {
  IndexSet lineal_part;
  IndexSet conic_part;
  IndexSet lineality_basis;  // subset of lineal_part
  std::vector<RVector> projected_conic;  // one per conic_part entry
  std::size_t lineality_dim = 0;
};

/// Splits S into lineal and conic parts, picks a greedy basis of the
/// lineality space and projects the conic part onto its orthogonal
/// complement.
ConeDecomposition decompose(const GeneratorSet& s, unsigned jobs = 1);

struct Minimization {
  GeneratorSet generators;
  IndexSet reduced;          // indices into S kept by reduce_ci
  ConeDecomposition decomposition;  // of the reduced set, indices into S
};

/// Minimum-cardinality generator: basis B of the lineality space, the
/// element -sum(B) when B is non-empty, then the conic part of reduce_ci(S).
Minimization minimize_trace(const GeneratorSet& s, unsigned jobs = 1);
GeneratorSet minimize(const GeneratorSet& s, unsigned jobs = 1);

/// cone(A) == cone(B) by mutual membership.
bool cone_equal(const GeneratorSet& a, const GeneratorSet& b);

}  // namespace mincone

#endif  // MINCONE_CONE_HPP
