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

#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "striclcs/lcs_core.hpp"

namespace striclcs::cli {

std::optional<TableChoice> parse_table_choice(const std::string& name) {
  if (name == "fa") return TableChoice::kA;
  if (name == "fb") return TableChoice::kB;
  if (name == "far") return TableChoice::kAReversed;
  if (name == "fbr") return TableChoice::kBReversed;
  return std::nullopt;
}

std::string dump_table(const SymbolString& a, const SymbolString& b, TableChoice which) {
  const int ell = lcs_length_linear_space(a, b);
  SymbolString x = a;
  SymbolString y = b;
  switch (which) {
    case TableChoice::kA:
      break;
    case TableChoice::kB:
      std::swap(x, y);
      break;
    case TableChoice::kAReversed:
      x = a.reversed();
      y = b.reversed();
      break;
    case TableChoice::kBReversed:
      x = b.reversed();
      y = a.reversed();
      break;
  }
  const FrontierTable table(x, y, ell);
  std::string out = "X = " + x.str() + "\nY = " + y.str() + "\nlcs = " + std::to_string(ell) +
                    ", diagonals = " + std::to_string(table.diagonal_count()) +
                    ", stored cells = " + std::to_string(table.stored_cells()) + "\n";
  return out + table.render(x);
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resolves one input string from its inline option, its file option, or the
// next line of `in`.
std::string resolve_input(const char* name, const CLI::Option* inline_opt,
                          const std::string& inline_value, const std::string& file,
                          std::istream& in) {
  if (inline_opt->count() > 0) return inline_value;
  if (!file.empty()) return read_input_file(file);
  std::string line;
  if (!std::getline(in, line)) {
    throw UsageError(std::string("missing input for ") + name +
                     " (pass it inline, via a file, or on stdin)");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

const std::map<std::string, Algorithm> kAlgorithms{
    {"space-efficient", Algorithm::kSpaceEfficient},
    {"deorowicz", Algorithm::kDeorowicz},
    {"brute", Algorithm::kBrute},
};

}  // namespace

int run_main(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"striclcs: longest common subsequence constrained to include a pattern string"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one STR-IC-LCS instance");
  std::string a_inline, b_inline, p_inline, a_file, b_file, p_file;
  auto* a_opt = solve->add_option("--a", a_inline, "String A");
  auto* b_opt = solve->add_option("--b", b_inline, "String B");
  auto* p_opt = solve->add_option("--p", p_inline, "Pattern P (may be empty)");
  solve->add_option("--a-file", a_file, "Read A from a file")->excludes(a_opt);
  solve->add_option("--b-file", b_file, "Read B from a file")->excludes(b_opt);
  solve->add_option("--p-file", p_file, "Read P from a file")->excludes(p_opt);
  Algorithm solve_algo = Algorithm::kSpaceEfficient;
  solve->add_option("--algo", solve_algo, "space-efficient | deorowicz | brute")
      ->transform(CLI::CheckedTransformer(kAlgorithms, CLI::ignore_case));
  bool want_witness = false;
  solve->add_flag("--witness", want_witness, "Also reconstruct a witness string");
  std::string solve_format = "text";
  solve->add_option("--format", solve_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  bool solve_dense = false;
  solve->add_flag("--dense-occurrence", solve_dense, "Use the dense next-occurrence table");
  bool solve_no_timing = false;
  solve->add_flag("--no-timing", solve_no_timing, "Report elapsed_ns as 0");

  // bench
  auto* bench = app.add_subcommand("bench", "Measure time and table cells over input sizes");
  BenchConfig bench_cfg;
  bench->add_option("--sizes", bench_cfg.sizes, "Comma-separated string lengths")
      ->delimiter(',')
      ->required();
  bench->add_option("--sigma", bench_cfg.sigma, "Alphabet size")->check(CLI::Range(1, 26));
  std::optional<int> mutations;
  bench->add_option("--mutations", mutations,
                    "Make B a copy of A with this many random edits");
  bench->add_option("--pattern-length", bench_cfg.pattern_length, "Length of P")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--reps", bench_cfg.repetitions, "Repetitions per size (fastest kept)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_cfg.seed, "RNG seed");
  bench->add_option("--algo", bench_cfg.algo, "space-efficient | deorowicz | brute")
      ->transform(CLI::CheckedTransformer(kAlgorithms, CLI::ignore_case));
  bool bench_dense = false;
  bench->add_flag("--dense-occurrence", bench_dense, "Use the dense next-occurrence table");
  std::string bench_format = "text";
  bench->add_option("--format", bench_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  bool bench_no_timing = false;
  bench->add_flag("--no-timing", bench_no_timing, "Report elapsed_ns as 0");

  // selftest
  auto* selftest = app.add_subcommand("selftest", "Randomized cross-check of all solvers");
  SelftestConfig self_cfg;
  selftest->add_option("--cases", self_cfg.cases, "Number of small random cases")
      ->check(CLI::NonNegativeNumber);
  selftest->add_option("--seed", self_cfg.seed, "RNG seed");
  selftest->add_flag("--inject-fault", self_cfg.inject_fault)->group("");

  // dump-table
  auto* dump = app.add_subcommand("dump-table", "Print one sparse frontier table");
  std::string dump_a, dump_b, dump_which = "fa";
  dump->add_option("--a", dump_a, "String A")->required();
  dump->add_option("--b", dump_b, "String B")->required();
  dump->add_option("--table", dump_which, "fa | fb | far | fbr")
      ->check(CLI::IsMember({"fa", "fb", "far", "fbr"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*solve) {
      SolveRequest req;
      req.a = SymbolString(resolve_input("A", a_opt, a_inline, a_file, in));
      req.b = SymbolString(resolve_input("B", b_opt, b_inline, b_file, in));
      req.p = SymbolString(resolve_input("P", p_opt, p_inline, p_file, in));
      req.algo = solve_algo;
      req.witness = want_witness;
      req.occurrence = solve_dense ? OccurrenceMode::kDense : OccurrenceMode::kSparse;
      const RunReport report = run_solve(req);
      out << (solve_format == "json" ? to_record(report, !solve_no_timing) + "\n"
                                     : to_text(report));
      return 0;
    }
    if (*bench) {
      bench_cfg.mutations = mutations;
      bench_cfg.occurrence = bench_dense ? OccurrenceMode::kDense : OccurrenceMode::kSparse;
      const BenchResult result = run_bench(bench_cfg);
      print_bench(out, bench_cfg, result, bench_format == "json", !bench_no_timing);
      return 0;
    }
    if (*selftest) {
      const SelftestResult res = run_selftest(self_cfg);
      if (!res.ok()) {
        err << "FAIL " << *res.failure << '\n';
        return 1;
      }
      out << "ok: " << res.small_cases << " small cases (three-way), " << res.mid_cases
          << " mid-scale cases, " << res.witnesses_checked << " witnesses, " << res.lemma_pairs
          << " lemma pairs\n";
      return 0;
    }
    if (*dump) {
      out << dump_table(SymbolString(dump_a), SymbolString(dump_b),
                        *parse_table_choice(dump_which));
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace striclcs::cli
