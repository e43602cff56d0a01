// Copyright 2026 The striclcs Authors.
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

#ifndef STRICLCS_TOOLS_CLI_COMMANDS_HPP_
#define STRICLCS_TOOLS_CLI_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "striclcs/solver.hpp"

namespace striclcs::cli {

enum class Algorithm { kSpaceEfficient, kDeorowicz, kBrute };

std::string to_string(Algorithm algo);
std::optional<Algorithm> parse_algorithm(const std::string& name);

// One solver run as reported by `solve` and recorded by `bench`.
struct RunReport {
  int length = -1;
  std::optional<std::string> witness;
  std::optional<IntervalPair> pair;
  int ell = 0;
  std::uint64_t cells_allocated = 0;
  std::uint64_t quadratic_cells = 0;
  std::uint64_t elapsed_ns = 0;
  Algorithm algo = Algorithm::kSpaceEfficient;
  std::optional<std::uint64_t> seed;
};

struct SolveRequest {
  SymbolString a;
  SymbolString b;
  SymbolString p;
  Algorithm algo = Algorithm::kSpaceEfficient;
  bool witness = false;
  OccurrenceMode occurrence = OccurrenceMode::kSparse;
};

RunReport run_solve(const SolveRequest& req);

// Single-line record with stable field names; optional fields are omitted
// when absent. With `with_timing` false, elapsed_ns is written as 0.
std::string to_record(const RunReport& report, bool with_timing = true);
std::string to_text(const RunReport& report);

// Reads a byte string from `path`, dropping one trailing "\n" or "\r\n".
// Throws std::runtime_error if the file cannot be read.
std::string read_input_file(const std::string& path);

// ---- workloads -------------------------------------------------------------

// Symbols 'a', 'b', ... drawn uniformly from the first `sigma` letters.
std::string random_string(std::mt19937_64& rng, int length, int sigma);

// Applies `count` random edits (substitution, insertion or deletion, chosen
// uniformly) to `base`.
std::string mutate(std::mt19937_64& rng, std::string base, int count, int sigma);

// ---- bench -----------------------------------------------------------------

struct BenchConfig {
  std::vector<int> sizes;
  int sigma = 2;
  // Unset: A and B independent. Set: B is A with this many random edits.
  std::optional<int> mutations;
  int pattern_length = 8;
  int repetitions = 3;
  std::uint64_t seed = 1;
  Algorithm algo = Algorithm::kSpaceEfficient;
  OccurrenceMode occurrence = OccurrenceMode::kSparse;
};

struct BenchRow {
  int n = 0;
  RunReport report;
  std::size_t intervals_a = 0;
  std::size_t intervals_b = 0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  // Least-squares slope of log(elapsed) against log(n); needs >= 2 sizes.
  std::optional<double> loglog_slope;
};

// Throws std::invalid_argument on an empty size list, sizes < 1, sigma
// outside [1..26], or repetitions < 1.
BenchResult run_bench(const BenchConfig& config);

std::optional<double> fit_loglog_slope(const std::vector<double>& xs,
                                       const std::vector<double>& ys);

void print_bench(std::ostream& out, const BenchConfig& config, const BenchResult& result,
                 bool json, bool with_timing);

// ---- selftest --------------------------------------------------------------

struct SelftestConfig {
  int cases = 1000;
  std::uint64_t seed = 42;
  // Corrupts the reference solver's answer so the harness has something to catch.
  bool inject_fault = false;
};

struct SelftestResult {
  int small_cases = 0;
  int mid_cases = 0;
  int lemma_pairs = 0;
  int witnesses_checked = 0;
  std::optional<std::string> failure;

  bool ok() const { return !failure.has_value(); }
};

SelftestResult run_selftest(const SelftestConfig& config);

// ---- dump-table ------------------------------------------------------------

enum class TableChoice { kA, kB, kAReversed, kBReversed };

std::optional<TableChoice> parse_table_choice(const std::string& name);

// Renders one of the four frontier tables the solver would build for (A, B).
std::string dump_table(const SymbolString& a, const SymbolString& b, TableChoice which);

// Entry point shared by the striclcs binary and the CLI tests.
int run_main(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace striclcs::cli

#endif  // STRICLCS_TOOLS_CLI_COMMANDS_HPP_
