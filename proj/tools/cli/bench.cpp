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

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "cli/commands.hpp"
#include "json.hpp"

namespace striclcs::cli {

std::string random_string(std::mt19937_64& rng, int length, int sigma) {
  std::uniform_int_distribution<int> pick(0, sigma - 1);
  std::string s(static_cast<std::size_t>(length), 'a');
  for (char& c : s) c = static_cast<char>('a' + pick(rng));
  return s;
}

std::string mutate(std::mt19937_64& rng, std::string base, int count, int sigma) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> symbol(0, sigma - 1);
  for (int k = 0; k < count; ++k) {
    const int op = base.empty() ? 1 : kind(rng);
    if (op == 1) {
      std::uniform_int_distribution<std::size_t> at(0, base.size());
      base.insert(base.begin() + static_cast<std::ptrdiff_t>(at(rng)),
                  static_cast<char>('a' + symbol(rng)));
      continue;
    }
    std::uniform_int_distribution<std::size_t> at(0, base.size() - 1);
    const std::size_t pos = at(rng);
    if (op == 2) {
      base.erase(pos, 1);
    } else if (sigma > 1) {
      // Substitution with a different symbol.
      const int old = base[pos] - 'a';
      const int shift = std::uniform_int_distribution<int>(1, sigma - 1)(rng);
      base[pos] = static_cast<char>('a' + (old + shift) % sigma);
    }
  }
  return base;
}

std::optional<double> fit_loglog_slope(const std::vector<double>& xs,
                                       const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) return std::nullopt;
  double mx = 0;
  double my = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (xs[k] <= 0 || ys[k] <= 0) return std::nullopt;
    mx += std::log(xs[k]);
    my += std::log(ys[k]);
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0;
  double sxx = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double dx = std::log(xs[k]) - mx;
    sxy += dx * (std::log(ys[k]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

BenchResult run_bench(const BenchConfig& config) {
  if (config.sizes.empty()) throw std::invalid_argument("bench: no sizes given");
  for (int n : config.sizes) {
    if (n < 1) throw std::invalid_argument("bench: sizes must be >= 1");
  }
  if (config.sigma < 1 || config.sigma > 26) {
    throw std::invalid_argument("bench: sigma must lie in [1..26]");
  }
  if (config.repetitions < 1) throw std::invalid_argument("bench: repetitions must be >= 1");
  if (config.pattern_length < 0) throw std::invalid_argument("bench: negative pattern length");
  if (config.mutations && *config.mutations < 0) {
    throw std::invalid_argument("bench: negative mutation count");
  }

  std::mt19937_64 rng(config.seed);
  BenchResult result;
  std::vector<double> xs;
  std::vector<double> ys;
  for (int n : config.sizes) {
    const std::string a = random_string(rng, n, config.sigma);
    const std::string b = config.mutations ? mutate(rng, a, *config.mutations, config.sigma)
                                           : random_string(rng, n, config.sigma);
    const std::string p = random_string(rng, config.pattern_length, config.sigma);

    SolveRequest req{SymbolString(a), SymbolString(b), SymbolString(p), config.algo, false,
                     config.occurrence};
    BenchRow row;
    row.n = n;
    std::uint64_t fastest = std::numeric_limits<std::uint64_t>::max();
    for (int rep = 0; rep < config.repetitions; ++rep) {
      RunReport report = run_solve(req);
      fastest = std::min(fastest, report.elapsed_ns);
      row.report = std::move(report);
    }
    row.report.elapsed_ns = fastest;
    row.report.seed = config.seed;
    if (config.algo == Algorithm::kSpaceEfficient) {
      // Interval counts are cheap to recompute and not part of RunReport.
      if (!req.p.empty()) {
        row.intervals_a = minimal_intervals(req.a, req.p).size();
        row.intervals_b = minimal_intervals(req.b, req.p).size();
      }
    }
    xs.push_back(n);
    ys.push_back(static_cast<double>(std::max<std::uint64_t>(fastest, 1)));
    result.rows.push_back(std::move(row));
  }
  result.loglog_slope = fit_loglog_slope(xs, ys);
  return result;
}

void print_bench(std::ostream& out, const BenchConfig& config, const BenchResult& result,
                 bool json, bool with_timing) {
  if (json) {
    for (const BenchRow& row : result.rows) {
      auto rec = nlohmann::ordered_json::parse(to_record(row.report, with_timing));
      rec["n"] = row.n;
      rec["sigma"] = config.sigma;
      rec["intervals_a"] = row.intervals_a;
      rec["intervals_b"] = row.intervals_b;
      out << rec.dump() << '\n';
    }
    nlohmann::ordered_json fit;
    if (result.loglog_slope && with_timing) {
      fit["loglog_slope"] = *result.loglog_slope;
    } else {
      fit["loglog_slope"] = nullptr;
    }
    out << fit.dump() << '\n';
    return;
  }

  out << std::setw(8) << "n" << std::setw(8) << "ell" << std::setw(8) << "length"
      << std::setw(14) << "cells" << std::setw(14) << "quadratic" << std::setw(16)
      << "elapsed_ns" << '\n';
  for (const BenchRow& row : result.rows) {
    out << std::setw(8) << row.n << std::setw(8) << row.report.ell << std::setw(8)
        << row.report.length << std::setw(14) << row.report.cells_allocated << std::setw(14)
        << row.report.quadratic_cells << std::setw(16)
        << (with_timing ? row.report.elapsed_ns : 0) << '\n';
  }
  if (result.loglog_slope && with_timing) {
    out << "log-log slope of time vs n: " << std::fixed << std::setprecision(3)
        << *result.loglog_slope << '\n';
  }
}

}  // namespace striclcs::cli
