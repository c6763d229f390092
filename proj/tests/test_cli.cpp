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

// Drives the mincone executable end to end. Usage: test_cli <path-to-mincone>

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_dir;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = "cd '" + g_dir.string() + "' && '" + g_cli + "' " + args + " 2>stderr.txt";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string stderr_text() {
  std::ifstream in(g_dir / "stderr.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const std::string& name, const std::string& text) {
  std::ofstream(g_dir / name) << text;
}

std::vector<std::string> tokens(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::istringstream ls(line);
    for (std::string t; ls >> t;) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("member exit codes and certificates") {
  write("orth.txt", "2 2\n1 0\n0 1\n");
  auto yes = run("member orth.txt '1 1'");
  CHECK(yes.code == 0);
  CHECK(yes.out == "member: yes\nlambda: 1 1\n");
  auto no = run("member orth.txt '-1 0'");
  CHECK(no.code == 1);
  CHECK(no.out == "member: no\nfarkas: -1 0\n");
  auto bad = run("member orth.txt '1 1 1'");
  CHECK(bad.code == 2);

  write("bad.txt", "2 2\n1 0\n0\n");
  auto malformed = run("member bad.txt '1 1'");
  CHECK(malformed.code == 2);
  CHECK(stderr_text().find("line 3") != std::string::npos);

  auto json = nlohmann::json::parse(run("--format json member orth.txt '2 1/2'").out);
  CHECK(json["operation"] == "member");
  CHECK(json["member"] == true);
  CHECK(json["certificates"]["lambda"] == nlohmann::json::array({"2", "1/2"}));
}

TEST_CASE("minimize, reduce, lineality and decompose") {
  write("plane.txt", "2 4\n1 0\n-1 0\n0 1\n0 -1\n");
  auto min = run("minimize plane.txt");
  CHECK(min.code == 0);
  CHECK(min.out == "2 3\n1 0\n0 1\n-1 -1\n");

  write("orth3.txt", "3 3\n1 0 0\n0 1 0\n0 0 1\n");
  CHECK(run("reduce orth3.txt").out == "3 3\n1 0 0\n0 1 0\n0 0 1\n");

  write("half.txt", "2 3\n1 0\n-1 0\n1 1\n");
  auto dec = run("decompose half.txt");
  CHECK(dec.code == 0);
  CHECK(dec.out ==
        "# lineality_dim 1\n# lineal_part 0 1\n# lineality_basis 0\n# conic_part 2\n"
        "# projected_conic\n2 1\n0 1\n");
  auto lin = run("lineality half.txt");
  CHECK(lin.out == "# lineality_dim 1\n# lineal_part 0 1\n# lineality_basis 0\n2 1\n1 0\n");

  auto js = nlohmann::json::parse(run("--format json decompose half.txt").out);
  CHECK(js["sizes"]["lineality_dim"] == 1);
  CHECK(js["conic_part"] == nlohmann::json::array({2}));

  auto dec_json = nlohmann::json::parse(run("minimize --format json --jobs 3 plane.txt").out);
  CHECK(dec_json["sizes"]["output"] == 3);

  // --jobs never changes output bytes.
  CHECK(run("--jobs 4 minimize plane.txt").out == min.out);
}

TEST_CASE("json and text encode the same rationals") {
  write("mixed.txt", "3 5\n1/2 0 1\n-1/2 0 -1\n0 2/3 1\n3 3 3\n0 0 1\n");
  for (const char* op : {"reduce", "minimize", "decompose", "lineality"}) {
    const auto text = run(op + std::string(" mixed.txt")).out;
    const auto js = nlohmann::json::parse(run(std::string("--format json ") + op + " mixed.txt").out);
    std::vector<std::string> from_json;
    for (const auto& row : js["output"])
      for (const auto& x : row) from_json.push_back(x.get<std::string>());
    CHECK_MESSAGE(tokens(text) == from_json, op);
  }
}

TEST_CASE("verify") {
  write("s.txt", "2 3\n1 0\n0 1\n1 1\n");
  write("good.txt", "2 2\n0 1\n1 0\n");
  write("extra.txt", "2 3\n1 0\n0 1\n2 1\n");
  write("three.txt", "3 1\n1 0 0\n");
  CHECK(run("verify s.txt good.txt").code == 0);
  auto extra = run("verify s.txt extra.txt");
  CHECK(extra.code == 1);
  CHECK(extra.out.find("candidate row 2 (2 1) is redundant") != std::string::npos);
  CHECK(run("verify s.txt three.txt").code == 2);
  CHECK(run("verify s.txt missing-file.txt").code == 2);
}

TEST_CASE("random") {
  auto a = run("random --n 3 --m 6 --d 1 --seed 7");
  auto b = run("random --n 3 --m 6 --d 1 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("random --n 2 --m 6 --d 3").code == 2);
  CHECK(run("random --n 2").code == 2);

  write("r.txt", a.out);
  auto dec = nlohmann::json::parse(run("--format json decompose r.txt").out);
  CHECK(dec["sizes"]["lineality_dim"].get<int>() >= 1);
}

TEST_CASE("pipelines through stdin round-trip") {
  write("plane.txt", "2 4\n1 0\n-1 0\n0 1\n0 -1\n");
  auto piped = run("minimize plane.txt | '" + g_cli + "' verify plane.txt -");
  CHECK(piped.code == 0);
  const auto once = run("minimize plane.txt").out;
  write("once.txt", once);
  CHECK(run("reduce once.txt").out == once);
  CHECK(run("minimize once.txt").out == once);
}

TEST_CASE("decimal rendering is marked lossy") {
  write("third.txt", "1 1\n1/3\n");
  auto out = run("--decimal 3 reduce third.txt").out;
  CHECK(out == "# lossy: decimal rendering with 3 digits\n1 1\n0.333\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--format yaml reduce x").code == 2);
  CHECK(run("--help").code == 0);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-mincone> [doctest options]\n", argv[0]);
    return 2;
  }
  g_cli = fs::absolute(argv[1]).string();
  g_dir = fs::temp_directory_path() / ("mincone_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(g_dir);

  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv + 1);
  const int rc = ctx.run();
  fs::remove_all(g_dir);
  return rc;
}
