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

// mincone command-line front end. Links only the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mincone/mincone.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

// Carries a message and the exit code it maps to.
struct CliError : std::runtime_error {
  CliError(int code_, const std::string& msg) : std::runtime_error(msg), code(code_) {}
  int code;
};

struct GensetDeleter {
  void operator()(mincone_genset* p) const { mincone_genset_destroy(p); }
};
struct MembershipDeleter {
  void operator()(mincone_membership* p) const { mincone_membership_destroy(p); }
};
struct ReductionDeleter {
  void operator()(mincone_reduction* p) const { mincone_reduction_destroy(p); }
};
struct DecompositionDeleter {
  void operator()(mincone_decomposition* p) const { mincone_decomposition_destroy(p); }
};
struct ReportDeleter {
  void operator()(mincone_verify_report* p) const { mincone_verify_report_destroy(p); }
};

using Genset = std::unique_ptr<mincone_genset, GensetDeleter>;

void check(mincone_status status, const std::string& context = {}) {
  if (status == MINCONE_OK) return;
  std::string msg = mincone_last_error();
  if (!context.empty()) msg = context + ": " + msg;
  throw CliError(kExitUsage, msg);
}

std::string take(char* s) {
  std::string out(s ? s : "");
  mincone_string_free(s);
  return out;
}

struct Options {
  std::string format = "text";
  unsigned jobs = 1;
  int decimal = -1;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitUsage, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Genset load(const std::string& path) {
  mincone_genset* raw = nullptr;
  check(mincone_genset_parse(read_input(path).c_str(), &raw), path);
  return Genset(raw);
}

std::vector<std::string> row_of(const mincone_genset* s, std::size_t r) {
  std::vector<std::string> row;
  for (std::size_t c = 0; c < mincone_genset_dim(s); ++c) {
    char* entry = nullptr;
    check(mincone_genset_entry(s, r, c, &entry));
    row.push_back(take(entry));
  }
  return row;
}

std::string decimal_of(const std::string& rational, int digits) {
  char* out = nullptr;
  check(mincone_rational_decimal(rational.c_str(), digits, &out));
  return take(out);
}

std::string join(const std::vector<std::string>& tokens, const Options& opt) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += opt.decimal >= 0 ? decimal_of(tokens[i], opt.decimal) : tokens[i];
  }
  return out;
}

json rows_json(const mincone_genset* s) {
  json rows = json::array();
  for (std::size_t r = 0; r < mincone_genset_size(s); ++r) rows.push_back(row_of(s, r));
  return rows;
}

json decimal_rows_json(const mincone_genset* s, int digits) {
  json rows = json::array();
  for (std::size_t r = 0; r < mincone_genset_size(s); ++r) {
    json row = json::array();
    for (const auto& x : row_of(s, r)) row.push_back(decimal_of(x, digits));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Cone-file rendering of `s`; with --decimal the rows are approximations and
// the block is flagged as lossy.
std::string cone_text(const mincone_genset* s, const Options& opt) {
  if (opt.decimal < 0) {
    char* text = nullptr;
    check(mincone_genset_format(s, &text));
    return take(text);
  }
  std::string out = "# lossy: decimal rendering with " + std::to_string(opt.decimal) + " digits\n";
  out += std::to_string(mincone_genset_dim(s)) + " " + std::to_string(mincone_genset_size(s)) + "\n";
  for (std::size_t r = 0; r < mincone_genset_size(s); ++r) out += join(row_of(s, r), opt) + "\n";
  return out;
}

json document(const std::string& op, const mincone_genset* input) {
  char* d = nullptr;
  check(mincone_genset_digest(input, &d));
  json doc;
  doc["operation"] = op;
  doc["input_digest"] = take(d);
  doc["ambient_dim"] = mincone_genset_dim(input);
  return doc;
}

void finish(json& doc, const mincone_genset* input, const mincone_genset* output,
            std::size_t lineality_dim, const Options& opt) {
  doc["sizes"] = {{"input", mincone_genset_size(input)},
                  {"output", output ? mincone_genset_size(output) : 0},
                  {"lineality_dim", lineality_dim}};
  doc["output"] = output ? rows_json(output) : json::array();
  if (opt.decimal >= 0 && output) {
    doc["lossy_decimal_digits"] = opt.decimal;
    doc["output_decimal"] = decimal_rows_json(output, opt.decimal);
  }
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

std::string index_list(const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(idx[i]);
  }
  return out;
}

std::vector<std::size_t> part_indices(const mincone_decomposition* d, mincone_part part) {
  std::vector<std::size_t> out(mincone_decomposition_part_size(d, part));
  for (std::size_t i = 0; i < out.size(); ++i) check(mincone_decomposition_part_index(d, part, i, &out[i]));
  return out;
}

int cmd_member(const std::string& file, const std::string& point, const Options& opt) {
  Genset s = load(file);
  mincone_membership* raw = nullptr;
  check(mincone_member(s.get(), point.c_str(), &raw), "point");
  std::unique_ptr<mincone_membership, MembershipDeleter> m(raw);

  const bool is_member = mincone_membership_is_member(m.get()) != 0;
  std::vector<std::string> cert;
  for (std::size_t i = 0; i < mincone_membership_certificate_size(m.get()); ++i) {
    char* e = nullptr;
    check(mincone_membership_certificate_entry(m.get(), i, &e));
    cert.push_back(take(e));
  }

  if (opt.format == "json") {
    json doc = document("member", s.get());
    doc["point"] = point;
    doc["member"] = is_member;
    doc["certificates"] = {{is_member ? "lambda" : "farkas", cert}};
    finish(doc, s.get(), nullptr, 0, opt);
    emit(doc);
  } else {
    std::cout << "member: " << (is_member ? "yes" : "no") << '\n';
    std::cout << (is_member ? "lambda: " : "farkas: ") << join(cert, opt) << '\n';
  }
  return is_member ? kExitOk : kExitNegative;
}

int cmd_reduce(const std::string& file, const Options& opt) {
  Genset s = load(file);
  mincone_reduction* raw = nullptr;
  check(mincone_reduce(s.get(), &raw));
  std::unique_ptr<mincone_reduction, ReductionDeleter> r(raw);
  const mincone_genset* out = mincone_reduction_output(r.get());

  if (opt.format == "json") {
    json doc = document("reduce", s.get());
    std::vector<std::size_t> kept(mincone_reduction_kept_count(r.get()));
    for (std::size_t i = 0; i < kept.size(); ++i) check(mincone_reduction_kept_index(r.get(), i, &kept[i]));
    doc["kept"] = kept;
    json certs = json::array();
    for (std::size_t i = 0; i < mincone_reduction_removed_count(r.get()); ++i) {
      std::size_t removed = 0;
      std::size_t terms = 0;
      check(mincone_reduction_removed_index(r.get(), i, &removed));
      check(mincone_reduction_removed_term_count(r.get(), i, &terms));
      json lambda = json::object();
      for (std::size_t t = 0; t < terms; ++t) {
        std::size_t gen = 0;
        char* coeff = nullptr;
        check(mincone_reduction_removed_term(r.get(), i, t, &gen, &coeff));
        lambda[std::to_string(gen)] = take(coeff);
      }
      certs.push_back({{"removed", removed}, {"lambda", std::move(lambda)}});
    }
    doc["certificates"] = std::move(certs);
    finish(doc, s.get(), out, 0, opt);
    emit(doc);
  } else {
    std::cout << cone_text(out, opt);
  }
  return kExitOk;
}

int cmd_minimize(const std::string& file, const Options& opt) {
  Genset s = load(file);
  mincone_genset* raw = nullptr;
  std::size_t d = 0;
  check(mincone_minimize(s.get(), opt.jobs, &raw, &d));
  Genset out(raw);
  if (opt.format == "json") {
    json doc = document("minimize", s.get());
    doc["certificates"] = json::array();
    finish(doc, s.get(), out.get(), d, opt);
    emit(doc);
  } else {
    std::cout << cone_text(out.get(), opt);
  }
  return kExitOk;
}

int cmd_lineality(const std::string& file, const Options& opt, bool full) {
  Genset s = load(file);
  mincone_decomposition* raw = nullptr;
  check(mincone_decompose(s.get(), opt.jobs, &raw));
  std::unique_ptr<mincone_decomposition, DecompositionDeleter> d(raw);
  const std::size_t dim = mincone_decomposition_lineality_dim(d.get());
  const auto lineal = part_indices(d.get(), MINCONE_PART_LINEAL);
  const auto conic = part_indices(d.get(), MINCONE_PART_CONIC);
  const auto basis = part_indices(d.get(), MINCONE_PART_BASIS);

  // `lineality` emits the basis rows; `decompose` emits the projected conic part.
  Genset basis_rows;
  const mincone_genset* rows = mincone_decomposition_projected(d.get());
  if (!full) {
    mincone_genset* b = nullptr;
    check(mincone_genset_create(mincone_genset_dim(s.get()), &b));
    basis_rows.reset(b);
    for (std::size_t i : basis) {
      std::string row;
      for (const auto& x : row_of(s.get(), i)) row += x + " ";
      check(mincone_genset_append(b, row.c_str()));
    }
    rows = b;
  }

  if (opt.format == "json") {
    json doc = document(full ? "decompose" : "lineality", s.get());
    doc["lineal_part"] = lineal;
    doc["lineality_basis"] = basis;
    if (full) doc["conic_part"] = conic;
    doc["certificates"] = json::array();
    finish(doc, s.get(), rows, dim, opt);
    emit(doc);
  } else {
    std::cout << "# lineality_dim " << dim << '\n';
    std::cout << "# lineal_part " << index_list(lineal) << '\n';
    std::cout << "# lineality_basis " << index_list(basis) << '\n';
    if (full) {
      std::cout << "# conic_part " << index_list(conic) << '\n';
      std::cout << "# projected_conic\n";
    }
    std::cout << cone_text(rows, opt);
  }
  return kExitOk;
}

int cmd_verify(const std::string& file, const std::string& candidate_file, std::size_t cap,
               const Options& opt) {
  Genset s = load(file);
  Genset g = load(candidate_file);
  if (mincone_genset_dim(s.get()) != mincone_genset_dim(g.get())) {
    throw CliError(kExitUsage, "dimension mismatch: '" + file + "' has n=" +
                                   std::to_string(mincone_genset_dim(s.get())) + ", '" +
                                   candidate_file + "' has n=" +
                                   std::to_string(mincone_genset_dim(g.get())));
  }
  mincone_verify_report* raw = nullptr;
  check(mincone_verify(s.get(), g.get(), cap, &raw));
  std::unique_ptr<mincone_verify_report, ReportDeleter> rep(raw);

  auto list = [&](mincone_verify_list which) {
    std::vector<std::size_t> out(mincone_verify_list_size(rep.get(), which));
    for (std::size_t i = 0; i < out.size(); ++i) check(mincone_verify_list_index(rep.get(), which, i, &out[i]));
    return out;
  };
  const bool passed = mincone_verify_passed(rep.get()) != 0;
  const auto missing = list(MINCONE_LIST_MISSING);
  const auto extraneous = list(MINCONE_LIST_EXTRANEOUS);
  const auto redundant = list(MINCONE_LIST_REDUNDANT);
  const std::size_t have = mincone_verify_candidate_size(rep.get());
  const std::size_t want = mincone_verify_expected_size(rep.get());
  std::size_t brute = 0;
  const bool brute_ran = mincone_verify_bruteforce_size(rep.get(), &brute) != 0;

  if (opt.format == "json") {
    json doc = document("verify", s.get());
    doc["passed"] = passed;
    doc["generates"] = mincone_verify_generates(rep.get()) != 0;
    doc["candidate_size"] = have;
    doc["expected_size"] = want;
    doc["bruteforce_size"] = brute_ran ? json(brute) : json(nullptr);
    doc["missing"] = missing;
    doc["extraneous"] = extraneous;
    doc["redundant"] = redundant;
    doc["certificates"] = json::array();
    finish(doc, s.get(), g.get(), mincone_verify_lineality_dim(rep.get()), opt);
    emit(doc);
  } else {
    for (std::size_t i : missing) {
      std::cout << "- input row " << i << " (" << join(row_of(s.get(), i), opt)
                << ") is not in the candidate cone\n";
    }
    for (std::size_t i : extraneous) {
      std::cout << "+ candidate row " << i << " (" << join(row_of(g.get(), i), opt)
                << ") lies outside the input cone\n";
    }
    if (have != want) {
      for (std::size_t i : redundant) {
        std::cout << "! candidate row " << i << " (" << join(row_of(g.get(), i), opt)
                  << ") is redundant\n";
      }
      if (redundant.empty() && have > want) {
        std::cout << "! candidate is conically independent but not of minimum size\n";
      }
    }
    std::cout << "size: candidate " << have << ", minimum " << want;
    if (brute_ran) std::cout << ", exhaustive subset minimum " << brute;
    std::cout << '\n' << (passed ? "ok" : "FAIL") << '\n';
  }
  return passed ? kExitOk : kExitNegative;
}

int cmd_random(std::size_t n, std::size_t m, std::size_t d, std::uint64_t seed, std::int64_t bound,
               bool nonnegative, const Options& opt) {
  mincone_instance_spec spec{n, m, d, seed, bound, nonnegative ? 1 : 0};
  mincone_genset* raw = nullptr;
  std::size_t measured = 0;
  check(mincone_random(&spec, &raw, &measured), "invalid instance");
  Genset out(raw);
  if (opt.format == "json") {
    json doc = document("random", out.get());
    doc["seed"] = seed;
    doc["requested_lineality_dim"] = d;
    doc["certificates"] = json::array();
    finish(doc, out.get(), out.get(), measured, opt);
    emit(doc);
  } else {
    std::cout << cone_text(out.get(), opt);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimum-cardinality generators of finitely generated convex cones"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", opt.jobs, "Worker threads for lineality membership tests")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  app.add_option("--decimal", opt.decimal, "Also render k-digit decimal approximations (lossy)")
      ->check(CLI::Range(0, 1000));

  std::string file;
  std::string candidate;
  std::string point;
  std::size_t cap = 12;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  std::int64_t bound = 5;
  bool nonnegative = false;

  auto* member = app.add_subcommand("member", "Decide membership of a point, with certificate");
  member->add_option("file", file, "Cone file ('-' for stdin)")->required();
  member->add_option("point", point, "Point as space- or comma-separated rationals")->required();

  auto* reduce = app.add_subcommand("reduce", "Conically independent sub-generator");
  reduce->add_option("file", file, "Cone file ('-' for stdin)")->required();
  auto* minimize = app.add_subcommand("minimize", "Minimum-cardinality generator");
  minimize->add_option("file", file, "Cone file ('-' for stdin)")->required();
  auto* lineality = app.add_subcommand("lineality", "Lineal part and lineality-space basis");
  lineality->add_option("file", file, "Cone file ('-' for stdin)")->required();
  auto* decompose = app.add_subcommand("decompose", "Lineal/conic split and projected conic part");
  decompose->add_option("file", file, "Cone file ('-' for stdin)")->required();

  auto* verify = app.add_subcommand("verify", "Check that a candidate is a minimum generator");
  verify->add_option("file", file, "Input cone file")->required();
  verify->add_option("candidate", candidate, "Candidate cone file ('-' for stdin)")->required();
  verify->add_option("--bruteforce-cap", cap, "Exhaustive check up to this many input generators (pointed cones)")
      ->capture_default_str();

  auto* random = app.add_subcommand("random", "Seeded random cone file");
  random->add_option("--n", n, "Ambient dimension")->required();
  random->add_option("--m", m, "Generator count")->required();
  random->add_option("--d", d, "Target lineality dimension")->capture_default_str();
  random->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  random->add_option("--bound", bound, "Coefficient bound")->capture_default_str();
  random->add_flag("--nonnegative", nonnegative, "Nonnegative entries only (pointed cone)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*member) return cmd_member(file, point, opt);
    if (*reduce) return cmd_reduce(file, opt);
    if (*minimize) return cmd_minimize(file, opt);
    if (*lineality) return cmd_lineality(file, opt, false);
    if (*decompose) return cmd_lineality(file, opt, true);
    if (*verify) return cmd_verify(file, candidate, cap, opt);
    if (*random) return cmd_random(n, m, d, seed, bound, nonnegative, opt);
  } catch (const CliError& e) {
    std::cerr << "mincone: " << e.what() << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "mincone: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
