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

#ifndef MINCONE_ORACLE_HPP
#define MINCONE_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "mincone/cone.hpp"

namespace mincone {

/// Raised when an exhaustive search would exceed its size cap.
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultBruteforceCap = 12;

/// Smallest subset T of S with cone(T) == cone(S), found by enumerating
/// subsets by increasing cardinality in lexicographic index order. Throws
/// LimitError when |S| > cap.
IndexSet bruteforce_min_subset(const GeneratorSet& s, std::size_t cap = kDefaultBruteforceCap);

struct KnownFamily {
  GeneratorSet generators;
  std::size_t expected_min;
  std::size_t expected_ci;
};

/// {+-e_1, ..., +-e_d} followed by {e_{d+1}, ..., e_{d+k}} in dimension d + k.
/// Throws std::invalid_argument when d + k == 0.
KnownFamily known_family(std::size_t d, std::size_t k);

struct InstanceSpec {
  std::size_t ambient_dim = 1;
  std::size_t generator_count = 0;
  std::size_t lineality_dim_target = 0;
  std::uint64_t seed = 0;
  std::int64_t coefficient_bound = 5;
  /// Draw every entry from [0, bound]; only valid with lineality_dim_target == 0.
  bool nonnegative = false;
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const InstanceSpec& spec);

struct RandomInstance {
  GeneratorSet generators;
  /// Lineality dimension measured with decompose after construction.
  std::size_t lineality_dim;
};

/// Seeded random cone. The generator is std::mt19937_64 seeded with
/// `spec.seed`; bounded integers are drawn as lo + (x mod (hi - lo + 1))
/// from successive raw outputs x, so the stream is fully specified.
///
/// Construction: lineality_dim_target random independent integer vectors are
/// inserted with their negations; the remaining slots are nonnegative
/// integer combinations of a random pointed seed set (an orthant under a
/// random coordinate sign pattern). The final order is a Fisher-Yates
/// shuffle driven by the same stream.
RandomInstance random_instance(const InstanceSpec& spec);

struct MinimumReport {
  bool generates = false;         // cone(G) == cone(S)
  std::size_t candidate_size = 0;
  std::size_t expected_size = 0;  // (d >= 1 ? d + 1 : 0) + |conic part of reduce_ci(S)|
  std::size_t lineality_dim = 0;
  bool pointed = false;
  std::optional<std::size_t> bruteforce_size;  // pointed and |S| <= cap only
  IndexSet missing;     // indices of S outside cone(G)
  IndexSet extraneous;  // indices of G outside cone(S)
  IndexSet redundant;   // indices of G inside the cone of the rest of G

  bool size_ok() const { return candidate_size == expected_size; }
  bool bruteforce_ok() const { return !bruteforce_size || *bruteforce_size == candidate_size; }
  bool passed() const { return generates && size_ok() && bruteforce_ok(); }
};

/// Checks that G is a minimum generator of cone(S), recomputing the
/// expected cardinality without going through minimize.
MinimumReport verify_minimum(const GeneratorSet& s, const GeneratorSet& g,
                             std::size_t cap = kDefaultBruteforceCap);

}  // namespace mincone

#endif  // MINCONE_ORACLE_HPP
