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

#include "mincone/cone.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>

namespace mincone {

namespace {

std::atomic<std::uint64_t> g_queries{0};
std::atomic<std::uint64_t> g_verified{0};
std::atomic<std::uint64_t> g_members{0};
std::atomic<std::uint64_t> g_non_members{0};

void require_dim(const RVector& v, std::size_t dim, const char* what) {
  if (v.dim() != dim) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(dim) +
                         ", got " + std::to_string(v.dim()));
  }
}

}  // namespace

GeneratorSet::GeneratorSet(std::size_t ambient_dim, std::vector<RVector> vectors)
    : ambient_dim_(ambient_dim) {
  vectors_.reserve(vectors.size());
  for (auto& v : vectors) push_back(std::move(v));
}

void GeneratorSet::push_back(RVector v) {
  require_dim(v, ambient_dim_, "generator");
  vectors_.push_back(std::move(v));
}

GeneratorSet GeneratorSet::subset(std::span<const std::size_t> indices) const {
  GeneratorSet out(ambient_dim_);
  out.vectors_.reserve(indices.size());
  for (std::size_t i : indices) out.vectors_.push_back(vectors_.at(i));
  return out;
}

GeneratorSet GeneratorSet::without(std::size_t index) const {
  GeneratorSet out(ambient_dim_);
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (i != index) out.vectors_.push_back(vectors_[i]);
  }
  return out;
}

RVector MembershipCertificate::combine(const GeneratorSet& s) const {
  RVector sum(s.ambient_dim());
  for (const auto& [i, lambda] : coefficients) sum += scale(lambda, s[i]);
  return sum;
}

MembershipAnswer check_membership(const RVector& c, const GeneratorSet& s) {
  require_dim(c, s.ambient_dim(), "membership query");
  FeasibilitySystem sys(RMatrix::from_columns(s.vectors(), s.ambient_dim()), c);
  const FeasibilityResult res = solve_feasibility(sys);
  g_queries.fetch_add(1, std::memory_order_relaxed);
  if (verify_certificate(sys, res)) g_verified.fetch_add(1, std::memory_order_relaxed);

  MembershipAnswer answer;
  if (const auto* f = std::get_if<Feasible>(&res)) {
    MembershipCertificate cert;
    for (std::size_t i = 0; i < f->y.dim(); ++i) {
      if (!f->y[i].is_zero()) cert.coefficients.emplace(i, f->y[i]);
    }
    answer.certificate = std::move(cert);
    g_members.fetch_add(1, std::memory_order_relaxed);
  } else {
    answer.farkas = std::get<Infeasible>(res).z;
    g_non_members.fetch_add(1, std::memory_order_relaxed);
  }
  return answer;
}

std::optional<MembershipCertificate> member(const RVector& c, const GeneratorSet& s) {
  return check_membership(c, s).certificate;
}

MembershipAudit membership_audit() {
  return {g_queries.load(), g_verified.load(), g_members.load(), g_non_members.load()};
}

void reset_membership_audit() {
  g_queries = 0;
  g_verified = 0;
  g_members = 0;
  g_non_members = 0;
}

Reduction reduce_ci_trace(const GeneratorSet& s) {
  Reduction out;
  IndexSet working(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) working[i] = i;

  for (std::size_t i = 0; i < s.size(); ++i) {
    IndexSet others;
    others.reserve(working.size());
    for (std::size_t j : working) {
      if (j != i) others.push_back(j);
    }
    auto cert = member(s[i], s.subset(others));
    if (!cert) continue;
    // Re-key the certificate from positions in `others` to indices of S.
    MembershipCertificate remapped;
    for (auto& [pos, lambda] : cert->coefficients) remapped.coefficients.emplace(others[pos], lambda);
    out.removed.push_back({i, std::move(remapped)});
    working = std::move(others);
  }
  out.kept = std::move(working);
  return out;
}

GeneratorSet reduce_ci(const GeneratorSet& s) { return s.subset(reduce_ci_trace(s).kept); }

IndexSet lineal_part(const GeneratorSet& s, unsigned jobs) {
  std::vector<char> in_lineal(s.size(), 0);
  auto test = [&](std::size_t i) { in_lineal[i] = member(-s[i], s).has_value() ? 1 : 0; };

  const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), s.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < s.size(); ++i) test(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < s.size(); i = next++) test(i);
      });
    }
  }

  IndexSet out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (in_lineal[i]) out.push_back(i);
  }
  return out;
}

bool is_pointed(const GeneratorSet& s, unsigned jobs) {
  for (std::size_t i : lineal_part(s, jobs)) {
    if (!s[i].is_zero()) return false;
  }
  return true;
}

ConeDecomposition decompose(const GeneratorSet& s, unsigned jobs) {
  ConeDecomposition d;
  d.lineal_part = lineal_part(s, jobs);
  std::size_t next_lineal = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (next_lineal < d.lineal_part.size() && d.lineal_part[next_lineal] == i) {
      ++next_lineal;
    } else {
      d.conic_part.push_back(i);
    }
  }

  const GeneratorSet lineal = s.subset(d.lineal_part);
  for (std::size_t pos : extract_basis(lineal.vectors())) {
    d.lineality_basis.push_back(d.lineal_part[pos]);
  }
  d.lineality_dim = d.lineality_basis.size();

  const GeneratorSet basis = s.subset(d.lineality_basis);
  d.projected_conic.reserve(d.conic_part.size());
  for (std::size_t i : d.conic_part) {
    d.projected_conic.push_back(project_complement(s[i], basis.vectors()));
  }
  return d;
}

Minimization minimize_trace(const GeneratorSet& s, unsigned jobs) {
  Minimization out{GeneratorSet(s.ambient_dim()), reduce_ci_trace(s).kept, {}};
  const GeneratorSet reduced = s.subset(out.reduced);
  ConeDecomposition d = decompose(reduced, jobs);

  RVector negative_sum(s.ambient_dim());
  for (std::size_t pos : d.lineality_basis) {
    out.generators.push_back(reduced[pos]);
    negative_sum -= reduced[pos];
  }
  if (d.lineality_dim > 0) out.generators.push_back(std::move(negative_sum));
  for (std::size_t pos : d.conic_part) out.generators.push_back(reduced[pos]);

  auto to_input = [&](IndexSet& idx) {
    for (auto& i : idx) i = out.reduced[i];
  };
  to_input(d.lineal_part);
  to_input(d.conic_part);
  to_input(d.lineality_basis);
  out.decomposition = std::move(d);
  return out;
}

GeneratorSet minimize(const GeneratorSet& s, unsigned jobs) {
  return std::move(minimize_trace(s, jobs).generators);
}

bool cone_equal(const GeneratorSet& a, const GeneratorSet& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError("cone_equal: ambient dimensions differ (" +
                         std::to_string(a.ambient_dim()) + " vs " +
                         std::to_string(b.ambient_dim()) + ")");
  }
  for (const auto& v : a.vectors()) {
    if (!member(v, b)) return false;
  }
  for (const auto& v : b.vectors()) {
    if (!member(v, a)) return false;
  }
  return true;
}

}  // namespace mincone
