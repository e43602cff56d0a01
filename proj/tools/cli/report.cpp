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

#include <chrono>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "cli/commands.hpp"
#include "json.hpp"
#include "striclcs/lcs_core.hpp"

namespace striclcs::cli {

std::string to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::kSpaceEfficient:
      return "space-efficient";
    case Algorithm::kDeorowicz:
      return "deorowicz";
    case Algorithm::kBrute:
      break;
  }
  return "brute";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  if (name == "space-efficient") return Algorithm::kSpaceEfficient;
  if (name == "deorowicz") return Algorithm::kDeorowicz;
  if (name == "brute") return Algorithm::kBrute;
  return std::nullopt;
}

RunReport run_solve(const SolveRequest& req) {
  RunReport report;
  report.algo = req.algo;
  report.quadratic_cells =
      static_cast<std::uint64_t>(req.a.size() + 1) * static_cast<std::uint64_t>(req.b.size() + 1);

  const auto start = std::chrono::steady_clock::now();
  StrIcLcsOutcome outcome;
  switch (req.algo) {
    case Algorithm::kSpaceEfficient: {
      Solution sol = solve_space_efficient(req.a, req.b, req.p, SolverOptions{req.occurrence});
      outcome = std::move(sol.outcome);
      report.cells_allocated = sol.stats.cells_allocated;
      if (req.witness) attach_witness(req.a, req.b, req.p, outcome);
      break;
    }
    case Algorithm::kDeorowicz:
      outcome = deorowicz_reference(req.a, req.b, req.p);
      report.cells_allocated = deorowicz_cells(req.a, req.b);
      if (req.witness) attach_witness(req.a, req.b, req.p, outcome);
      break;
    case Algorithm::kBrute:
      outcome = brute_force(req.a, req.b, req.p);
      break;
  }
  const auto stop = std::chrono::steady_clock::now();
  report.elapsed_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());

  report.length = outcome.length;
  report.pair = outcome.pair;
  if (req.witness && outcome.witness) report.witness = outcome.witness->str();
  report.ell = lcs_length_linear_space(req.a, req.b);
  return report;
}

std::string to_record(const RunReport& report, bool with_timing) {
  nlohmann::ordered_json j;
  j["length"] = report.length;
  if (report.witness) j["witness"] = *report.witness;
  if (report.pair) {
    j["pair"] = {{report.pair->a.begin, report.pair->a.end},
                 {report.pair->b.begin, report.pair->b.end}};
  }
  j["ell"] = report.ell;
  j["cells_allocated"] = report.cells_allocated;
  j["quadratic_cells"] = report.quadratic_cells;
  j["elapsed_ns"] = with_timing ? report.elapsed_ns : 0;
  j["algo"] = to_string(report.algo);
  if (report.seed) j["seed"] = *report.seed;
  // Inputs are raw bytes; replace rather than throw on invalid UTF-8.
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string to_text(const RunReport& report) {
  std::ostringstream out;
  out << "length: " << report.length;
  if (report.length < 0) out << " (no solution)";
  out << '\n';
  if (report.witness) out << "witness: " << *report.witness << '\n';
  if (report.pair) {
    out << "pair: A[" << report.pair->a.begin << ".." << report.pair->a.end << "] B["
        << report.pair->b.begin << ".." << report.pair->b.end << "]\n";
  }
  out << "algo: " << to_string(report.algo) << '\n'
      << "lcs(A,B): " << report.ell << '\n'
      << "cells allocated: " << report.cells_allocated << '\n'
      << "quadratic cells: " << report.quadratic_cells << '\n'
      << "elapsed: " << report.elapsed_ns << " ns\n";
  return out.str();
}

std::string read_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("error while reading file: " + path);
  if (!data.empty() && data.back() == '\n') {
    data.pop_back();
    if (!data.empty() && data.back() == '\r') data.pop_back();
  }
  return data;
}

}  // namespace striclcs::cli
