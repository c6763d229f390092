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

#include "mincone/conefile.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <vector>

namespace mincone {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line, bool allow_commas) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto is_sep = [&](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\r' || (allow_commas && ch == ',');
  };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConeFileError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ConeFileError::ConeFileError(std::size_t line, const std::string& message)
    : ParseError(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

GeneratorSet parse_cone_file(std::string_view text) {
  std::size_t dim = 0;
  std::size_t count = 0;
  bool have_header = false;
  std::vector<RVector> rows;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_tokens(line, false);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 2) throw ConeFileError(line_no, "header must be 'n m'");
      dim = parse_count(tokens[0], line_no, "dimension");
      count = parse_count(tokens[1], line_no, "generator count");
      if (dim == 0) throw ConeFileError(line_no, "dimension must be positive");
      have_header = true;
      continue;
    }
    if (rows.size() == count) {
      throw ConeFileError(line_no, "unexpected row beyond the " + std::to_string(count) +
                                       " declared in the header");
    }
    if (tokens.size() != dim) {
      throw ConeFileError(line_no, "expected " + std::to_string(dim) + " entries, found " +
                                       std::to_string(tokens.size()));
    }
    RVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      try {
        v[i] = Rational::parse(tokens[i]);
      } catch (const ParseError& e) {
        throw ConeFileError(line_no, e.what());
      }
    }
    rows.push_back(std::move(v));
  }

  if (!have_header) throw ConeFileError(0, "missing header 'n m'");
  if (rows.size() != count) {
    throw ConeFileError(line_no, "expected " + std::to_string(count) + " rows, found " +
                                     std::to_string(rows.size()));
  }
  return GeneratorSet(dim, std::move(rows));
}

std::string format_cone_file(const GeneratorSet& s) {
  std::string out = std::to_string(s.ambient_dim()) + " " + std::to_string(s.size()) + "\n";
  for (const auto& v : s.vectors()) {
    out += v.to_string();
    out += '\n';
  }
  return out;
}

RVector parse_point(std::string_view text, std::size_t dim) {
  const auto tokens = split_tokens(text, true);
  if (tokens.size() != dim) {
    throw ParseError("point has " + std::to_string(tokens.size()) + " entries, expected " +
                     std::to_string(dim));
  }
  RVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = Rational::parse(tokens[i]);
  return v;
}

std::string digest(const GeneratorSet& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : format_cone_file(s)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace mincone
