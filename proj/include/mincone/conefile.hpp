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

#ifndef MINCONE_CONEFILE_HPP
#define MINCONE_CONEFILE_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "mincone/cone.hpp"

namespace mincone {

/// Parse failure in a cone file; `line()` is 1-based, 0 when not tied to a line.
class ConeFileError : public ParseError {
 public:
  ConeFileError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the text cone format:
///
///     # comment
///     n m
///     x_11 ... x_1n
///     ...
///     x_m1 ... x_mn
///
/// Entries are `p`, `-p` or `p/q`. Blank lines are skipped and `#` starts a
/// comment that runs to the end of the line.
GeneratorSet parse_cone_file(std::string_view text);

/// Header plus one row per generator, canonical rationals, '\n' line ends.
std::string format_cone_file(const GeneratorSet& s);

/// Whitespace- or comma-separated rationals of exactly `dim` entries.
RVector parse_point(std::string_view text, std::size_t dim);

/// FNV-1a 64-bit hash of format_cone_file(s), as "fnv1a64:<16 hex digits>".
std::string digest(const GeneratorSet& s);

}  // namespace mincone

#endif  // MINCONE_CONEFILE_HPP
