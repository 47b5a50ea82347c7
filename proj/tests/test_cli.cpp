/*
   Copyright 2026 The cremona Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "cremona/cli/commands.hpp"

using namespace cremona;
using namespace cremona::cli;

namespace {

RunConfig config(std::string command, Family family, int k, int n) {
  RunConfig c;
  c.command = std::move(command);
  c.family = family;
  c.k = k;
  c.n = n;
  c.samples = 5;
  return c;
}

struct Process {
  int exit_code;
  std::string out;
};

Process run_cli(const std::string& args) {
  const std::string cmd = std::string(CREMONA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (const auto got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("degree reports") {
  const auto ok = run(config("degree", Family::pk, 2, 8));
  CHECK(ok.exit_code == kOk);
  CHECK(ok.report["schema"] == 1);
  CHECK(ok.report["degree"]["exceptional"] == false);
  CHECK(ok.report["degree"]["delta"]["decimal"].get<std::string>().rfind("1.176280818", 0) == 0);
  const auto ex = run(config("degree", Family::pk, 2, 7));
  CHECK(ex.exit_code == kOk);
  CHECK(ex.report["degree"]["exceptional"] == true);
  const auto bi = run(config("degree", Family::biproj, 3, 4));
  CHECK(bi.report["degree"]["delta"]["decimal"].get<std::string>().rfind("1.40126", 0) == 0);
}

TEST_CASE("construct serializes exact and decimal data") {
  const auto r = run(config("construct", Family::pk, 2, 8));
  CHECK(r.exit_code == kOk);
  const auto& c = r.report["construction"];
  CHECK(c["t_plus"].size() == 3);
  CHECK(c["t_plus"][0].contains("residue"));
  CHECK(c["t_plus"][0].contains("decimal"));
  CHECK(c["modulus"].size() == 11);
  for (const auto& s : c["L_row_sums"][0]) CHECK(s["residue"] == Json::array({"1"}));
  const auto ex = run(config("construct", Family::pk, 2, 7));
  CHECK(ex.exit_code == kExceptionalPair);
  CHECK(ex.report["error"]["message"].get<std::string>().find("root of unity") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  CHECK(run(config("verify", Family::pk, 2, 8)).exit_code == kOk);
  auto bad = config("verify", Family::pk, 2, 8);
  bad.perturb = mpq_class(1, 1000);
  const auto r = run(bad);
  CHECK(r.exit_code == kVerificationFailed);
  CHECK(r.report["verify"]["orbit"]["passed"] == false);
  auto fl = config("verify", Family::pk, 3, 6);
  fl.backend = Backend::floating;
  const auto f = run(fl);
  CHECK(f.exit_code == kOk);
  CHECK(f.report["verify"]["max_residual"].get<double>() < 1e-38);
}

TEST_CASE("picard report") {
  const auto r = run(config("picard", Family::pk, 2, 8));
  CHECK(r.exit_code == kOk);
  CHECK(r.report["picard"]["preserves_form"] == true);
  CHECK(r.report["picard"]["spectral_radius"]["decimal"].get<std::string>().rfind("1.17628", 0) == 0);
  auto k9 = config("picard", Family::pk, 2, 7);
  CHECK(run(k9).report["picard"]["canonical_self_intersection"] == 0);
  auto general = config("picard", Family::pk, 2, 8);
  general.lengths = {2, 3, 4};
  general.sigma = {0, 2, 1};
  const auto g = run(general);
  CHECK(g.exit_code == kOk);
  CHECK_FALSE(g.report["picard"].contains("comparison"));
  auto invalid = config("picard", Family::pk, 2, 8);
  invalid.sigma = {0, 0, 1};
  CHECK(run(invalid).exit_code == kInvalidInput);
}

TEST_CASE("report bundles") {
  const auto r = run(config("report", Family::pk, 2, 8));
  CHECK(r.exit_code == kOk);
  CHECK(r.report["cross_check"]["delta_agrees"] == true);
  CHECK(r.report["cross_check"]["trace_compatibility"]["passed"] == true);
  const auto ex = run(config("report", Family::pk, 2, 7));
  CHECK(ex.exit_code == kExceptionalPair);
  CHECK(ex.report.contains("degree"));
  CHECK_FALSE(ex.report.contains("construction"));
  // parse -> serialize -> parse is a fixed point
  const auto text = serialize(r.report);
  CHECK(serialize(Json::parse(text)) == text);
}

TEST_CASE("invalid input") {
  CHECK(run(config("degree", Family::pk, 1, 8)).exit_code == kInvalidInput);
  auto c = config("verify", Family::pk, 2, 8);
  c.precision_bits = 32;
  CHECK(run(c).exit_code == kInvalidInput);
  c = config("verify", Family::pk, 2, 8);
  c.samples = 0;
  CHECK(run(c).exit_code == kInvalidInput);
  CHECK_THROWS_AS(parse_range("5..2"), InvalidInput);
  CHECK(parse_range("2..6") == std::pair{2, 6});
  CHECK(parse_range("4") == std::pair{4, 4});
  CHECK_THROWS_AS(parse_backend("gpu"), InvalidInput);
}

TEST_CASE("sweeps merge cells in (k, n) order") {
  auto c = config("degree", Family::pk, 2, 2);
  c.sweep = SweepRange{2, 3, 6, 8};
  const auto r = run(c);
  REQUIRE(r.report["cells"].size() == 6);
  CHECK(r.report["cells"][0]["k"] == 2);
  CHECK(r.report["cells"][0]["n"] == 6);
  CHECK(r.report["cells"][5]["k"] == 3);
  CHECK(r.report["cells"][5]["n"] == 8);
  CHECK(r.exit_code == kOk);
  auto v = config("verify", Family::pk, 2, 2);
  v.sweep = SweepRange{2, 2, 7, 8};
  CHECK(run(v).exit_code == kExceptionalPair);  // (2, 7) is exceptional
}

TEST_CASE("precision from the environment") {
  ::setenv("CREMONA_PRECISION", "128", 1);
  CHECK(default_precision() == 128);
  ::setenv("CREMONA_PRECISION", "12", 1);
  CHECK_THROWS_AS(default_precision(), InvalidInput);
  ::setenv("CREMONA_PRECISION", "abc", 1);
  CHECK_THROWS_AS(default_precision(), InvalidInput);
  ::unsetenv("CREMONA_PRECISION");
  CHECK(default_precision() == arith::kDefaultPrecisionBits);
}

TEST_CASE("command-line binary: exit codes and determinism") {
  CHECK(run_cli("degree --family pk -k 2 -n 8").exit_code == 0);
  CHECK(run_cli("construct --family pk -k 2 -n 7").exit_code == 3);
  CHECK(run_cli("verify --family pk -k 2 -n 8 --perturb 1/1000").exit_code == 4);
  CHECK(run_cli("verify --family pk -k 2 -n 8 --perturb nonsense").exit_code == 2);
  CHECK(run_cli("degree --family quartic -k 2 -n 8").exit_code == 2);
  CHECK(run_cli("degree -k").exit_code == 2);
  const auto a = run_cli("report -k 2 -n 8 --samples 3 --seed 11");
  const auto b = run_cli("report -k 2 -n 8 --samples 3 --seed 11");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["config"]["seed"] == 11);
}

TEST_CASE("command-line binary writes --out files") {
  const std::string path = "cremona_cli_test_out.json";
  std::remove(path.c_str());
  const auto r = run_cli("degree -k 3 -n 6 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(Json::parse(ss.str())["degree"]["k"] == 3);
  std::remove(path.c_str());
}
