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

#include "mincone/oracle.hpp"

#include <random>
#include <string>
#include <utility>

namespace mincone {

namespace {

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

// Advances `combo` (strictly increasing indices below n) to the next
// combination of the same size in lexicographic order.
bool next_combination(IndexSet& combo, std::size_t n) {
  const std::size_t k = combo.size();
  for (std::size_t i = k; i-- > 0;) {
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

IndexSet bruteforce_min_subset(const GeneratorSet& s, std::size_t cap) {
  if (s.size() > cap) {
    throw LimitError("bruteforce_min_subset: " + std::to_string(s.size()) +
                     " generators exceed the cap of " + std::to_string(cap));
  }
  const std::size_t n = s.size();
  for (std::size_t k = 0; k <= n; ++k) {
    IndexSet combo(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i;
    do {
      if (cone_equal(s.subset(combo), s)) return combo;
    } while (k > 0 && next_combination(combo, n));
  }
  // k == n always succeeds.
  throw InternalError("bruteforce_min_subset: full set failed to generate itself");
}

KnownFamily known_family(std::size_t d, std::size_t k) {
  if (d + k == 0) throw std::invalid_argument("known_family: d + k must be at least 1");
  const std::size_t n = d + k;
  GeneratorSet s(n);
  for (std::size_t i = 0; i < d; ++i) {
    s.push_back(RVector::unit(n, i));
    s.push_back(-RVector::unit(n, i));
  }
  for (std::size_t i = d; i < n; ++i) s.push_back(RVector::unit(n, i));
  return {std::move(s), (d >= 1 ? d + 1 : 0) + k, 2 * d + k};
}

void validate(const InstanceSpec& spec) {
  if (spec.ambient_dim == 0) throw std::invalid_argument("ambient dimension must be positive");
  if (spec.lineality_dim_target > spec.ambient_dim) {
    throw std::invalid_argument("lineality dimension " + std::to_string(spec.lineality_dim_target) +
                                " exceeds ambient dimension " + std::to_string(spec.ambient_dim));
  }
  if (spec.generator_count < 2 * spec.lineality_dim_target) {
    throw std::invalid_argument("generator count must be at least twice the lineality dimension");
  }
  if (spec.coefficient_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  if (spec.nonnegative && spec.lineality_dim_target != 0) {
    throw std::invalid_argument("nonnegative instances cannot have a lineality space");
  }
}

RandomInstance random_instance(const InstanceSpec& spec) {
  validate(spec);
  const std::size_t n = spec.ambient_dim;
  const std::int64_t bound = spec.coefficient_bound;
  Stream rng(spec.seed);

  std::vector<RVector> out;
  out.reserve(spec.generator_count);

  std::vector<RVector> lineal;
  while (lineal.size() < spec.lineality_dim_target) {
    RVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.uniform(-bound, bound);
    lineal.push_back(v);
    if (extract_basis(lineal).size() != lineal.size()) lineal.pop_back();
  }
  for (const auto& v : lineal) {
    out.push_back(v);
    out.push_back(-v);
  }

  const std::size_t remaining = spec.generator_count - out.size();
  if (remaining > 0) {
    std::vector<std::int64_t> signs(n, 1);
    if (!spec.nonnegative) {
      for (auto& sg : signs) sg = rng.uniform(0, 1) ? 1 : -1;
    }
    const auto seed_count = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n) + 1));
    std::vector<RVector> seeds;
    while (seeds.size() < seed_count) {
      RVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = signs[i] * rng.uniform(0, bound);
      if (!v.is_zero()) seeds.push_back(std::move(v));
    }
    for (std::size_t slot = 0; slot < remaining; ++slot) {
      RVector v(n);
      bool any = false;
      for (const auto& seed : seeds) {
        if (!rng.uniform(0, 1)) continue;
        v += scale(Rational(rng.uniform(1, bound)), seed);
        any = true;
      }
      if (!any) v = seeds[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(seed_count) - 1))];
      out.push_back(std::move(v));
    }
  }

  for (std::size_t i = out.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1));
    std::swap(out[i - 1], out[j]);
  }

  GeneratorSet generators(n, std::move(out));
  const std::size_t measured = decompose(generators).lineality_dim;
  return {std::move(generators), measured};
}

MinimumReport verify_minimum(const GeneratorSet& s, const GeneratorSet& g, std::size_t cap) {
  MinimumReport report;
  if (s.ambient_dim() != g.ambient_dim()) {
    throw DimensionError("verify_minimum: ambient dimensions differ");
  }
  report.candidate_size = g.size();

  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!member(s[i], g)) report.missing.push_back(i);
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!member(g[i], s)) report.extraneous.push_back(i);
    if (member(g[i], g.without(i))) report.redundant.push_back(i);
  }
  report.generates = report.missing.empty() && report.extraneous.empty();

  // Expected size from first principles: reduce, split off generators whose
  // negation stays in the cone, and measure the span of those by rank.
  const GeneratorSet reduced = reduce_ci(s);
  std::vector<RVector> lineal;
  std::size_t conic = 0;
  for (const auto& v : reduced.vectors()) {
    if (member(-v, reduced)) {
      lineal.push_back(v);
    } else {
      ++conic;
    }
  }
  report.lineality_dim =
      lineal.empty() ? 0 : rref(RMatrix::from_rows(lineal, s.ambient_dim())).rank();
  report.pointed = report.lineality_dim == 0;
  report.expected_size = (report.lineality_dim >= 1 ? report.lineality_dim + 1 : 0) + conic;

  if (report.pointed && s.size() <= cap) report.bruteforce_size = bruteforce_min_subset(s, cap).size();
  return report;
}

}  // namespace mincone
