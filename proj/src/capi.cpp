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

#include "mincone/mincone.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <iterator>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mincone/cone.hpp"
#include "mincone/conefile.hpp"
#include "mincone/oracle.hpp"

struct mincone_genset {
  mincone::GeneratorSet set;
};

struct mincone_membership {
  bool is_member;
  std::vector<mincone::Rational> certificate;
};

struct mincone_reduction {
  mincone_genset output;
  mincone::Reduction trace;
};

struct mincone_decomposition {
  mincone::ConeDecomposition parts;
  mincone_genset projected;
};

struct mincone_verify_report {
  mincone::MinimumReport report;
};

namespace {

thread_local std::string t_last_error;
thread_local std::size_t t_last_error_line = 0;

mincone_status fail(mincone_status status, std::string message, std::size_t line = 0) {
  t_last_error = std::move(message);
  t_last_error_line = line;
  return status;
}

// Runs `body`, translating the C++ exception hierarchy into status codes.
template <typename F>
mincone_status guarded(F&& body) {
  try {
    body();
    t_last_error.clear();
    t_last_error_line = 0;
    return MINCONE_OK;
  } catch (const mincone::ConeFileError& e) {
    return fail(MINCONE_ERROR_PARSE, e.what(), e.line());
  } catch (const mincone::ParseError& e) {
    return fail(MINCONE_ERROR_PARSE, e.what());
  } catch (const mincone::DimensionError& e) {
    return fail(MINCONE_ERROR_DIMENSION, e.what());
  } catch (const mincone::LimitError& e) {
    return fail(MINCONE_ERROR_LIMIT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(MINCONE_ERROR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(MINCONE_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(MINCONE_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MINCONE_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MINCONE_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(MINCONE_ERROR_INTERNAL, "unknown error");
  }
}

#define MINCONE_REQUIRE(ptr)                                                         \
  do {                                                                               \
    if ((ptr) == nullptr) return fail(MINCONE_ERROR_INVALID_ARGUMENT, #ptr " is NULL"); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Seq>
const auto& checked_at(const Seq& seq, std::size_t i) {
  if (i >= seq.size()) {
    throw std::out_of_range("index " + std::to_string(i) + " out of range (size " +
                            std::to_string(seq.size()) + ")");
  }
  return seq[i];
}

const mincone::IndexSet& part_of(const mincone_decomposition* d, mincone_part part) {
  switch (part) {
    case MINCONE_PART_LINEAL: return d->parts.lineal_part;
    case MINCONE_PART_CONIC: return d->parts.conic_part;
    case MINCONE_PART_BASIS: return d->parts.lineality_basis;
  }
  throw std::invalid_argument("unknown decomposition part");
}

const mincone::IndexSet& list_of(const mincone_verify_report* r, mincone_verify_list list) {
  switch (list) {
    case MINCONE_LIST_MISSING: return r->report.missing;
    case MINCONE_LIST_EXTRANEOUS: return r->report.extraneous;
    case MINCONE_LIST_REDUNDANT: return r->report.redundant;
  }
  throw std::invalid_argument("unknown verification list");
}

}  // namespace

extern "C" {

const char* mincone_status_name(mincone_status status) {
  switch (status) {
    case MINCONE_OK: return "ok";
    case MINCONE_ERROR_PARSE: return "parse error";
    case MINCONE_ERROR_DIMENSION: return "dimension mismatch";
    case MINCONE_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case MINCONE_ERROR_OUT_OF_RANGE: return "index out of range";
    case MINCONE_ERROR_LIMIT: return "size limit exceeded";
    case MINCONE_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mincone_last_error(void) { return t_last_error.c_str(); }
size_t mincone_last_error_line(void) { return t_last_error_line; }
void mincone_string_free(char* s) { std::free(s); }

mincone_status mincone_genset_create(size_t dim, mincone_genset** out) {
  MINCONE_REQUIRE(out);
  if (dim == 0) return fail(MINCONE_ERROR_INVALID_ARGUMENT, "dimension must be positive");
  return guarded([&] { *out = new mincone_genset{mincone::GeneratorSet(dim)}; });
}

mincone_status mincone_genset_parse(const char* text, mincone_genset** out) {
  MINCONE_REQUIRE(text);
  MINCONE_REQUIRE(out);
  return guarded([&] { *out = new mincone_genset{mincone::parse_cone_file(text)}; });
}

void mincone_genset_destroy(mincone_genset* set) { delete set; }

mincone_status mincone_genset_append(mincone_genset* set, const char* row) {
  MINCONE_REQUIRE(set);
  MINCONE_REQUIRE(row);
  return guarded([&] { set->set.push_back(mincone::parse_point(row, set->set.ambient_dim())); });
}

size_t mincone_genset_dim(const mincone_genset* set) { return set ? set->set.ambient_dim() : 0; }
size_t mincone_genset_size(const mincone_genset* set) { return set ? set->set.size() : 0; }

mincone_status mincone_genset_entry(const mincone_genset* set, size_t row, size_t col, char** out) {
  MINCONE_REQUIRE(set);
  MINCONE_REQUIRE(out);
  return guarded([&] {
    const auto& v = checked_at(set->set.vectors(), row);
    *out = dup_string(checked_at(v.entries(), col).to_string());
  });
}

mincone_status mincone_genset_format(const mincone_genset* set, char** out) {
  MINCONE_REQUIRE(set);
  MINCONE_REQUIRE(out);
  return guarded([&] { *out = dup_string(mincone::format_cone_file(set->set)); });
}

mincone_status mincone_genset_digest(const mincone_genset* set, char** out) {
  MINCONE_REQUIRE(set);
  MINCONE_REQUIRE(out);
  return guarded([&] { *out = dup_string(mincone::digest(set->set)); });
}

mincone_status mincone_member(const mincone_genset* set, const char* point,
                              mincone_membership** out) {
  MINCONE_REQUIRE(set);
  MINCONE_REQUIRE(point);
  MINCONE_REQUIRE(out);
  return guarded([&] {
    const auto c = mincone::parse_point(point, set->set.ambient_dim());
    auto answer = mincone::check_membership(c, set->set);
    auto result = std::make_unique<mincone_membership>();
    result->is_member = answer.is_member();
    if (answer.certificate) {
      result->certificate.resize(set->set.size());
      for (const auto& [i, lambda] : answer.certificate->coefficients) result->certificate[i] = lambda;
    } else {
      const auto& z = *answer.farkas;
      result->certificate.assign(z.entries().begin(), z.entries().end());
    }
    *out = result.release();
  });
}

void mincone_membership_destroy(mincone_membership* m) { delete m; }
int mincone_membership_is_member(const mincone_membership* m) { return m && m->is_member ? 1 : 0; }
size_t mincone_membership_certificate_size(const mincone_membership* m) {
  return m ? m->certificate.size() : 0;
}

mincone_status mincone_membership_certificate_entry(const mincone_membership* m, size_t i,
                                                    char** out) {
  MINCONE_REQUIRE(m);
  MINCONE_REQUIRE(out);
  return guarded([&] { *out = dup_string(checked_at(m->certificate, i).to_string()); });
}

mincone_status mincone_reduce(const mincone_genset* set, mincone_reduction** out) {
  MINCONE_REQUIRE(set);
  MINCONE_REQUIRE(out);
  return guarded([&] {
    auto trace = mincone::reduce_ci_trace(set->set);
    auto output = set->set.subset(trace.kept);
    *out = new mincone_reduction{mincone_genset{std::move(output)}, std::move(trace)};
  });
}

void mincone_reduction_destroy(mincone_reduction* r) { delete r; }
const mincone_genset* mincone_reduction_output(const mincone_reduction* r) {
  return r ? &r->output : nullptr;
}
size_t mincone_reduction_kept_count(const mincone_reduction* r) { return r ? r->trace.kept.size() : 0; }

mincone_status mincone_reduction_kept_index(const mincone_reduction* r, size_t i, size_t* index) {
  MINCONE_REQUIRE(r);
  MINCONE_REQUIRE(index);
  return guarded([&] { *index = checked_at(r->trace.kept, i); });
}

size_t mincone_reduction_removed_count(const mincone_reduction* r) {
  return r ? r->trace.removed.size() : 0;
}

mincone_status mincone_reduction_removed_index(const mincone_reduction* r, size_t i, size_t* index) {
  MINCONE_REQUIRE(r);
  MINCONE_REQUIRE(index);
  return guarded([&] { *index = checked_at(r->trace.removed, i).index; });
}

mincone_status mincone_reduction_removed_term_count(const mincone_reduction* r, size_t i,
                                                    size_t* count) {
  MINCONE_REQUIRE(r);
  MINCONE_REQUIRE(count);
  return guarded([&] { *count = checked_at(r->trace.removed, i).certificate.coefficients.size(); });
}

mincone_status mincone_reduction_removed_term(const mincone_reduction* r, size_t i, size_t term,
                                              size_t* generator, char** coefficient) {
  MINCONE_REQUIRE(r);
  MINCONE_REQUIRE(generator);
  MINCONE_REQUIRE(coefficient);
  return guarded([&] {
    const auto& coeffs = checked_at(r->trace.removed, i).certificate.coefficients;
    if (term >= coeffs.size()) throw std::out_of_range("certificate term out of range");
    auto it = std::next(coeffs.begin(), static_cast<std::ptrdiff_t>(term));
    *generator = it->first;
    *coefficient = dup_string(it->second.to_string());
  });
}

mincone_status mincone_minimize(const mincone_genset* set, unsigned jobs, mincone_genset** out,
                                size_t* lineality_dim) {
  MINCONE_REQUIRE(set);
  MINCONE_REQUIRE(out);
  return guarded([&] {
    auto result = mincone::minimize_trace(set->set, jobs);
    if (lineality_dim) *lineality_dim = result.decomposition.lineality_dim;
    *out = new mincone_genset{std::move(result.generators)};
  });
}

mincone_status mincone_decompose(const mincone_genset* set, unsigned jobs,
                                 mincone_decomposition** out) {
  MINCONE_REQUIRE(set);
  MINCONE_REQUIRE(out);
  return guarded([&] {
    auto parts = mincone::decompose(set->set, jobs);
    mincone::GeneratorSet projected(set->set.ambient_dim(), parts.projected_conic);
    *out = new mincone_decomposition{std::move(parts), mincone_genset{std::move(projected)}};
  });
}

void mincone_decomposition_destroy(mincone_decomposition* d) { delete d; }
size_t mincone_decomposition_lineality_dim(const mincone_decomposition* d) {
  return d ? d->parts.lineality_dim : 0;
}

size_t mincone_decomposition_part_size(const mincone_decomposition* d, mincone_part part) {
  if (!d) return 0;
  try {
    return part_of(d, part).size();
  } catch (const std::exception&) {
    return 0;
  }
}

mincone_status mincone_decomposition_part_index(const mincone_decomposition* d, mincone_part part,
                                                size_t i, size_t* index) {
  MINCONE_REQUIRE(d);
  MINCONE_REQUIRE(index);
  return guarded([&] { *index = checked_at(part_of(d, part), i); });
}

const mincone_genset* mincone_decomposition_projected(const mincone_decomposition* d) {
  return d ? &d->projected : nullptr;
}

mincone_status mincone_verify(const mincone_genset* input, const mincone_genset* candidate,
                              size_t bruteforce_cap, mincone_verify_report** out) {
  MINCONE_REQUIRE(input);
  MINCONE_REQUIRE(candidate);
  MINCONE_REQUIRE(out);
  return guarded([&] {
    *out = new mincone_verify_report{
        mincone::verify_minimum(input->set, candidate->set, bruteforce_cap)};
  });
}

void mincone_verify_report_destroy(mincone_verify_report* r) { delete r; }
int mincone_verify_passed(const mincone_verify_report* r) { return r && r->report.passed() ? 1 : 0; }
int mincone_verify_generates(const mincone_verify_report* r) {
  return r && r->report.generates ? 1 : 0;
}
size_t mincone_verify_candidate_size(const mincone_verify_report* r) {
  return r ? r->report.candidate_size : 0;
}
size_t mincone_verify_expected_size(const mincone_verify_report* r) {
  return r ? r->report.expected_size : 0;
}
size_t mincone_verify_lineality_dim(const mincone_verify_report* r) {
  return r ? r->report.lineality_dim : 0;
}

int mincone_verify_bruteforce_size(const mincone_verify_report* r, size_t* size) {
  if (!r || !r->report.bruteforce_size) return 0;
  if (size) *size = *r->report.bruteforce_size;
  return 1;
}

size_t mincone_verify_list_size(const mincone_verify_report* r, mincone_verify_list list) {
  if (!r) return 0;
  try {
    return list_of(r, list).size();
  } catch (const std::exception&) {
    return 0;
  }
}

mincone_status mincone_verify_list_index(const mincone_verify_report* r, mincone_verify_list list,
                                         size_t i, size_t* index) {
  MINCONE_REQUIRE(r);
  MINCONE_REQUIRE(index);
  return guarded([&] { *index = checked_at(list_of(r, list), i); });
}

mincone_status mincone_random(const mincone_instance_spec* spec, mincone_genset** out,
                              size_t* measured_lineality_dim) {
  MINCONE_REQUIRE(spec);
  MINCONE_REQUIRE(out);
  return guarded([&] {
    mincone::InstanceSpec s;
    s.ambient_dim = spec->ambient_dim;
    s.generator_count = spec->generator_count;
    s.lineality_dim_target = spec->lineality_dim;
    s.seed = spec->seed;
    s.coefficient_bound = spec->coefficient_bound;
    s.nonnegative = spec->nonnegative != 0;
    auto instance = mincone::random_instance(s);
    if (measured_lineality_dim) *measured_lineality_dim = instance.lineality_dim;
    *out = new mincone_genset{std::move(instance.generators)};
  });
}

mincone_status mincone_rational_decimal(const char* rational, int digits, char** out) {
  MINCONE_REQUIRE(rational);
  MINCONE_REQUIRE(out);
  return guarded([&] { *out = dup_string(mincone::Rational::parse(rational).to_decimal(digits)); });
}

}  // extern "C"
