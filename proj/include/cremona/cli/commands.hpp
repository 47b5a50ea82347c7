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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/cli/json_report.hpp"

namespace cremona::cli {

enum ExitCode : int { kOk = 0, kInternalError = 1, kInvalidInput = 2, kExceptionalPair = 3, kVerificationFailed = 4 };

enum class Backend { exact, floating };

std::string_view to_string(Backend b);
Backend parse_backend(std::string_view name);

struct SweepRange {
  int k_min = 0, k_max = 0, n_min = 0, n_max = 0;
};

/// Parses "a..b" (or a single integer) into an inclusive range.
std::pair<int, int> parse_range(std::string_view text);

struct RunConfig {
  std::string command;  // degree | construct | verify | picard | report
  Family family = Family::pk;
  int k = 2;
  int n = 8;
  int m = 1;
  Backend backend = Backend::exact;
  long precision_bits = arith::kDefaultPrecisionBits;
  int samples = 20;
  std::optional<std::string> out;
  std::uint64_t seed = 1;
  std::optional<mpq_class> perturb;   // shift applied to β_1 before verification
  std::optional<SweepRange> sweep;
  std::vector<int> lengths;           // picard orbit lengths; empty means (1, ..., 1, n)
  std::vector<int> sigma;             // picard permutation; empty means i ↦ i+1 mod k+1

  /// Throws InvalidInput on out-of-range fields.
  void validate() const;
};

/// Precision from CREMONA_PRECISION, or the library default. Throws InvalidInput on a malformed value.
long default_precision();

struct CommandResult {
  Json report;
  int exit_code = kOk;
};

CommandResult cmd_degree(const RunConfig& config);
CommandResult cmd_construct(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_picard(const RunConfig& config);
CommandResult cmd_report(const RunConfig& config);

/// Dispatches one command, mapping exceptions onto exit codes and error reports. Runs sweeps in parallel.
CommandResult run(const RunConfig& config);

/// One-line human-readable summary of a result.
std::string summary(const RunConfig& config, const CommandResult& result);

}  // namespace cremona::cli
