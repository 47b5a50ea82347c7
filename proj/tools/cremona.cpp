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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cremona/cli/commands.hpp"

namespace {

using cremona::cli::RunConfig;

struct RawOptions {
  std::string family = "pk";
  std::string backend = "exact";
  std::vector<std::string> sweep;
  std::string perturb;
  std::string out;
};

void add_common(CLI::App& sub, RunConfig& config, RawOptions& raw) {
  sub.add_option("--family", raw.family, "pk, biproj or lines")->capture_default_str();
  sub.add_option("-k", config.k, "dimension of the projective space")->capture_default_str();
  sub.add_option("-n", config.n, "length of the long orbit")->capture_default_str();
  sub.add_option("-m", config.m, "number of projective factors (lines family)")->capture_default_str();
  sub.add_option("--backend", raw.backend, "exact or float")->capture_default_str();
  sub.add_option("--precision", config.precision_bits, "working precision in bits (default: $CREMONA_PRECISION or 256)");
  sub.add_option("--samples", config.samples, "sampled curve parameters")->capture_default_str();
  sub.add_option("--seed", config.seed, "seed for sampled checks")->capture_default_str();
  sub.add_option("--out", raw.out, "write JSON here instead of stdout");
  sub.add_option("--sweep", raw.sweep, "evaluate a grid: --sweep KMIN..KMAX NMIN..NMAX")->expected(2);
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = cremona::cli;
  RunConfig config;
  RawOptions raw;
  try {
    config.precision_bits = cli::default_precision();
  } catch (const std::exception& e) {
    std::cerr << "cremona: " << e.what() << "\n";
    return cli::kInvalidInput;
  }

  CLI::App app{"Cremona maps realising Coxeter elements: spectra, constructions and orbit verification"};
  app.require_subcommand(1);
  std::vector<std::pair<std::string, std::string>> commands{
      {"degree", "characteristic polynomial, cyclotomic split and dynamical degree"},
      {"construct", "exact construction of the map over Q(delta)"},
      {"verify", "orbit closure, curve invariance and distinctness"},
      {"picard", "Picard lattice action and spectral cross-checks"},
      {"report", "full pipeline with cross-checks"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(*sub, config, raw);
    if (name == "verify") sub->add_option("--perturb", raw.perturb, "add this rational to beta_1 (negative control)");
    if (name == "picard") {
      sub->add_option("--lengths", config.lengths, "orbit lengths n_0 ... n_k")->delimiter(',');
      sub->add_option("--sigma", config.sigma, "orbit permutation sigma(0) ... sigma(k)")->delimiter(',');
    }
    sub->callback([&config, name = name] { config.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInvalidInput;
  }


  try {
    config.family = cremona::parse_family(raw.family);
    config.backend = cli::parse_backend(raw.backend);
    if (!raw.perturb.empty()) {
      mpq_class q;
      if (q.set_str(raw.perturb, 10) != 0) throw cremona::InvalidInput("--perturb expects a rational such as 1/1000");
      q.canonicalize();
      config.perturb = q;
    }
    if (!raw.sweep.empty()) {
      const auto [k_min, k_max] = cli::parse_range(raw.sweep.at(0));
      const auto [n_min, n_max] = cli::parse_range(raw.sweep.at(1));
      config.sweep = cli::SweepRange{k_min, k_max, n_min, n_max};
    }
    if (!raw.out.empty()) config.out = raw.out;
  } catch (const cremona::InvalidInput& e) {
    std::cerr << "cremona: " << e.what() << "\n";
    return cli::kInvalidInput;
  }
  const cli::CommandResult result = cli::run(config);

  const std::string text = cli::serialize(result.report);
  if (config.out) {
    std::ofstream file(*config.out, std::ios::binary);
    if (!file) {
      std::cerr << "cremona: cannot write " << *config.out << "\n";
      return cli::kInvalidInput;
    }
    file << text;
  } else {
    std::cout << text;
  }
  std::cerr << cli::summary(config, result) << "\n";
  return result.exit_code;
}
