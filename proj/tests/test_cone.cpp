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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "mincone/cone.hpp"
#include "mincone/oracle.hpp"
#include "support/oracles.hpp"

using namespace mincone;
using mincone::testing::TestRng;

namespace {

GeneratorSet gs(std::size_t n, std::vector<RVector> vs) { return GeneratorSet(n, std::move(vs)); }

const GeneratorSet kOrthant = gs(2, {RVector{1, 0}, RVector{0, 1}});
const GeneratorSet kPlane = gs(2, {RVector{1, 0}, RVector{-1, 0}, RVector{0, 1}, RVector{0, -1}});
const GeneratorSet kHalfPlane = gs(2, {RVector{1, 0}, RVector{-1, 0}, RVector{0, 1}});

// Small random cones mixing a lineality part with pointed rays.
GeneratorSet random_small(TestRng& rng, std::size_t n, std::size_t m) {
  GeneratorSet s(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (i > 0 && rng.uniform(0, 3) == 0) {
      const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1));
      s.push_back(rng.uniform(0, 1) ? -s[j] : scale(Rational(rng.uniform(1, 3)), s[j]));
    } else {
      s.push_back(rng.vector(n, 2));
    }
  }
  return s;
}

InstanceSpec mixed_spec(TestRng& rng, std::uint64_t seed) {
  InstanceSpec spec;
  spec.ambient_dim = static_cast<std::size_t>(rng.uniform(1, 4));
  spec.lineality_dim_target = static_cast<std::size_t>(rng.uniform(0, std::min<long>(2, static_cast<long>(spec.ambient_dim))));
  spec.generator_count = std::max<std::size_t>(1, 2 * spec.lineality_dim_target) +
                         static_cast<std::size_t>(rng.uniform(0, 5));
  spec.seed = seed;
  spec.coefficient_bound = 3;
  return spec;
}

}  // namespace

TEST_CASE("member examples") {
  auto yes = member(RVector{1, 1}, kOrthant);
  REQUIRE(yes);
  CHECK(yes->coefficients.at(0) == Rational(1));
  CHECK(yes->coefficients.at(1) == Rational(1));
  CHECK(yes->combine(kOrthant) == RVector{1, 1});

  CHECK_FALSE(member(RVector{-1, 0}, kOrthant));
  auto ans = check_membership(RVector{-1, 0}, kOrthant);
  REQUIRE(ans.farkas);
  CHECK(*ans.farkas == RVector{-1, 0});

  auto empty = member(RVector::zero(2), GeneratorSet(2));
  REQUIRE(empty);
  CHECK(empty->coefficients.empty());
  CHECK_FALSE(member(RVector{1, 0}, GeneratorSet(2)));

  CHECK_THROWS_AS(member(RVector{1, 0, 0}, kOrthant), DimensionError);
}

TEST_CASE("generator sets enforce a shared dimension") {
  GeneratorSet s(2);
  CHECK_THROWS_AS(s.push_back(RVector{1, 2, 3}), DimensionError);
  CHECK_THROWS_AS(gs(2, {RVector{1}}), DimensionError);
}

TEST_CASE("reduce_ci examples") {
  CHECK(reduce_ci(gs(2, {RVector{1, 0}, RVector{0, 1}, RVector{1, 1}})) == kOrthant);
  // Index 0 is scanned first and (1,0) = 1/2 (2,0).
  CHECK(reduce_ci(gs(2, {RVector{1, 0}, RVector{2, 0}})) == gs(2, {RVector{2, 0}}));
  CHECK(reduce_ci(kHalfPlane) == kHalfPlane);
  CHECK(reduce_ci(gs(2, {RVector{0, 0}, RVector{1, 0}, RVector{0, 0}})) == gs(2, {RVector{1, 0}}));
  CHECK(reduce_ci(gs(2, {RVector{0, 0}})).empty());
  CHECK(reduce_ci(GeneratorSet(3)).empty());

  auto trace = reduce_ci_trace(gs(2, {RVector{1, 0}, RVector{0, 1}, RVector{1, 1}}));
  CHECK(trace.kept == IndexSet{0, 1});
  REQUIRE(trace.removed.size() == 1);
  CHECK(trace.removed[0].index == 2);
  CHECK(trace.removed[0].certificate.coefficients.at(0) == Rational(1));
  CHECK(trace.removed[0].certificate.coefficients.at(1) == Rational(1));
}

TEST_CASE("lineal_part and is_pointed examples") {
  CHECK(lineal_part(kHalfPlane) == IndexSet{0, 1});
  CHECK(lineal_part(kOrthant).empty());
  CHECK(lineal_part(kPlane) == IndexSet{0, 1, 2, 3});
  CHECK(lineal_part(kPlane, 4) == IndexSet{0, 1, 2, 3});

  CHECK(is_pointed(kOrthant));
  CHECK_FALSE(is_pointed(gs(2, {RVector{1, 0}, RVector{-1, 0}})));
  CHECK(is_pointed(GeneratorSet(2)));
  CHECK(is_pointed(gs(2, {RVector{0, 0}, RVector{1, 1}})));
}

TEST_CASE("decompose examples") {
  auto d = decompose(kHalfPlane);
  CHECK(d.lineal_part == IndexSet{0, 1});
  CHECK(d.conic_part == IndexSet{2});
  CHECK(d.lineality_basis == IndexSet{0});
  CHECK(d.lineality_dim == 1);
  CHECK(d.projected_conic == std::vector<RVector>{RVector{0, 1}});

  // Frozen from testing::gram_schmidt_project((1,1), [(1,0)]).
  auto tilted = decompose(gs(2, {RVector{1, 0}, RVector{-1, 0}, RVector{1, 1}}));
  CHECK(tilted.projected_conic == std::vector<RVector>{RVector{0, 1}});

  const GeneratorSet pointed = gs(3, {RVector{1, 2, 0}, RVector{0, 1, 3}});
  auto p = decompose(pointed);
  CHECK(p.lineal_part.empty());
  CHECK(p.lineality_basis.empty());
  CHECK(p.lineality_dim == 0);
  CHECK(p.conic_part == IndexSet{0, 1});
  CHECK(p.projected_conic == std::vector<RVector>(pointed.vectors().begin(), pointed.vectors().end()));
}

TEST_CASE("minimize examples") {
  CHECK(minimize(gs(2, {RVector{1, 0}, RVector{0, 1}, RVector{1, 1}})) == kOrthant);
  CHECK(minimize(kPlane) == gs(2, {RVector{1, 0}, RVector{0, 1}, RVector{-1, -1}}));
  CHECK(minimize(kHalfPlane) == kHalfPlane);
  CHECK(minimize(GeneratorSet(2)).empty());
  CHECK(minimize(gs(2, {RVector{0, 0}})).empty());

  auto trace = minimize_trace(gs(2, {RVector{1, 1}, RVector{1, 0}, RVector{-1, 0}, RVector{2, 0}}));
  CHECK(trace.reduced == IndexSet{0, 2, 3});
  CHECK(trace.decomposition.lineality_basis == IndexSet{2});
  CHECK(trace.decomposition.conic_part == IndexSet{0});
}

TEST_CASE("cone_equal examples") {
  CHECK(cone_equal(gs(2, {RVector{1, 0}, RVector{0, 1}, RVector{1, 1}}), kOrthant));
  CHECK(cone_equal(gs(2, {RVector{1, 0}}), gs(2, {RVector{2, 0}})));
  CHECK_FALSE(cone_equal(gs(2, {RVector{1, 0}}), gs(2, {RVector{-1, 0}})));
  CHECK_THROWS_AS(cone_equal(kOrthant, GeneratorSet(3)), DimensionError);
}

TEST_CASE("property: member agrees with Caratheodory and certificates reconstruct") {
  TestRng rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    const GeneratorSet s = random_small(rng, n, static_cast<std::size_t>(rng.uniform(0, 5)));
    const RVector c = rng.vector(n, 3);
    auto ans = check_membership(c, s);
    CHECK(ans.is_member() == mincone::testing::caratheodory_member(c, s));
    if (ans.certificate) {
      CHECK(ans.certificate->combine(s) == c);
      for (const auto& [i, l] : ans.certificate->coefficients) CHECK(l.sign() > 0);
    } else {
      REQUIRE(ans.farkas);
      CHECK(dot(c, *ans.farkas).sign() > 0);
      for (const auto& v : s.vectors()) CHECK(dot(v, *ans.farkas).sign() <= 0);
    }
  }
}

TEST_CASE("property: cone-level invariants on random cones") {
  TestRng rng(1234);
  for (int trial = 0; trial < 120; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const GeneratorSet s = random_small(rng, n, static_cast<std::size_t>(rng.uniform(0, 7)));
    const GeneratorSet reduced = reduce_ci(s);
    const GeneratorSet minimal = minimize(s);

    // Conic independence of the reduction.
    for (std::size_t i = 0; i < reduced.size(); ++i) CHECK_FALSE(member(reduced[i], reduced.without(i)));
    // Cone preservation, cross-checked with the enumeration oracle in low dimension.
    CHECK(cone_equal(s, reduced));
    CHECK(cone_equal(s, minimal));
    if (n <= 3) CHECK(mincone::testing::caratheodory_cone_equal(s, minimal));
    // Factor-two bound and equality on pointed cones.
    CHECK(reduced.size() <= 2 * minimal.size());
    if (is_pointed(s)) CHECK(reduced.size() == minimal.size());

    const ConeDecomposition d = decompose(s);
    CHECK(is_pointed(GeneratorSet(n, d.projected_conic)));
    for (const auto& p : d.projected_conic)
      for (std::size_t b : d.lineality_basis) CHECK(dot(p, s[b]).is_zero());
    CHECK(d.lineal_part.size() + d.conic_part.size() == s.size());
    CHECK(d.lineality_basis.size() == d.lineality_dim);

    // Size formula for minimize.
    const ConeDecomposition dr = decompose(reduced);
    CHECK(minimal.size() == (dr.lineality_dim ? dr.lineality_dim + 1 : 0) + dr.conic_part.size());
  }
}

TEST_CASE("property: projection is injective on conically independent sets") {
  TestRng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const GeneratorSet reduced = reduce_ci(random_small(rng, n, static_cast<std::size_t>(rng.uniform(1, 7))));
    const auto proj = decompose(reduced).projected_conic;
    for (std::size_t i = 0; i < proj.size(); ++i)
      for (std::size_t j = i + 1; j < proj.size(); ++j) CHECK(proj[i] != proj[j]);
  }
}

TEST_CASE("property: every subset of a reduced set is reduced") {
  TestRng rng(66);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const GeneratorSet reduced = reduce_ci(random_small(rng, n, static_cast<std::size_t>(rng.uniform(1, 7))));
    if (reduced.size() > 6) continue;
    for (std::uint32_t mask = 0; mask < (1u << reduced.size()); ++mask) {
      IndexSet idx;
      for (std::size_t i = 0; i < reduced.size(); ++i)
        if (mask & (1u << i)) idx.push_back(i);
      const GeneratorSet t = reduced.subset(idx);
      CHECK(reduce_ci(t) == t);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("property: lineal part of a reduced set has at most 2d elements, surplus independent") {
  TestRng rng(88);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const InstanceSpec spec = mixed_spec(rng, seed);
    const GeneratorSet reduced = reduce_ci(random_instance(spec).generators);
    const ConeDecomposition d = decompose(reduced);
    CHECK(d.lineal_part.size() <= 2 * d.lineality_dim);
    std::vector<RVector> surplus;
    for (std::size_t i : d.lineal_part) {
      if (std::find(d.lineality_basis.begin(), d.lineality_basis.end(), i) == d.lineality_basis.end())
        surplus.push_back(reduced[i]);
    }
    CHECK(extract_basis(surplus).size() == surplus.size());
  }
}

TEST_CASE("property: positive rescaling leaves the sizes unchanged") {
  TestRng rng(303);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const GeneratorSet s = random_small(rng, n, static_cast<std::size_t>(rng.uniform(1, 7)));
    GeneratorSet scaled(n);
    for (const auto& v : s.vectors()) scaled.push_back(scale(Rational(rng.uniform(1, 7), rng.uniform(1, 7)), v));
    CHECK(reduce_ci(s).size() == reduce_ci(scaled).size());
    CHECK(minimize(s).size() == minimize(scaled).size());
  }
}

TEST_CASE("property: permutations never change the minimum size") {
  TestRng rng(909);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const GeneratorSet s = random_instance(mixed_spec(rng, seed)).generators;
    const std::size_t base = minimize(s).size();
    std::vector<RVector> vs(s.vectors().begin(), s.vectors().end());
    for (int p = 0; p < 4; ++p) {
      std::shuffle(vs.begin(), vs.end(), rng.engine());
      CHECK(minimize(GeneratorSet(s.ambient_dim(), vs)).size() == base);
    }
  }
}

TEST_CASE("parallel lineality tests give identical results") {
  TestRng rng(17);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GeneratorSet s = random_instance(mixed_spec(rng, seed)).generators;
    CHECK(lineal_part(s, 1) == lineal_part(s, 3));
    CHECK(minimize(s, 1) == minimize(s, 4));
  }
}

TEST_CASE("membership audit counts every verified query") {
  reset_membership_audit();
  (void)member(RVector{1, 1}, kOrthant);
  (void)member(RVector{-1, 1}, kOrthant);
  const auto audit = membership_audit();
  CHECK(audit.queries == 2);
  CHECK(audit.verified == 2);
  CHECK(audit.members == 1);
  CHECK(audit.non_members == 1);
}
