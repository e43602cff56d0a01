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

#include "striclcs/solver.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "striclcs/lcs_core.hpp"

namespace striclcs {

namespace {

bool pattern_too_long(const SymbolString& a, const SymbolString& b, const SymbolString& p) {
  return p.size() > std::min(a.size(), b.size());
}

}  // namespace

Solution solve_space_efficient(const SymbolString& a, const SymbolString& b,
                               const SymbolString& p, const SolverOptions& options) {
  Solution sol;
  if (p.empty()) {
    sol.stats.ell = lcs_length_linear_space(a, b);
    sol.outcome.length = sol.stats.ell;
    return sol;
  }
  if (pattern_too_long(a, b, p)) return sol;

  const MinimalIntervalSet ia = minimal_intervals(a, p);
  const MinimalIntervalSet ib = minimal_intervals(b, p);
  sol.stats.intervals_a = ia.size();
  sol.stats.intervals_b = ib.size();
  if (ia.empty() || ib.empty()) return sol;

  const int ell = lcs_length_linear_space(a, b);
  sol.stats.ell = ell;

  const SymbolString ar = a.reversed();
  const SymbolString br = b.reversed();
  const FrontierTable fa(a, b, ell, options.occurrence);
  const FrontierTable fb(b, a, ell, options.occurrence);
  const FrontierTable far(ar, br, ell, options.occurrence);
  const FrontierTable fbr(br, ar, ell, options.occurrence);
  sol.stats.cells_allocated =
      fa.stored_cells() + fb.stored_cells() + far.stored_cells() + fbr.stored_cells();

  const int r = p.size();
  int best = -1;
  IntervalPair best_pair{};
  for (const Interval& x : ia) {
    ScanCursors cur = ScanCursors::fresh(ell);
    for (const Interval& y : ib) {
      const int before = prefix_lcs_query(fa, fb, x.begin - 1, y.begin - 1, cur);
      const int after = suffix_lcs_query(far, fbr, x.end + 1, y.end + 1, cur);
      if (before + r + after > best) {
        best = before + r + after;
        best_pair = IntervalPair{x, y};
      }
    }
    sol.stats.cells_visited += cur.cells_visited;
  }
  sol.stats.candidate_pairs = ia.size() * ib.size();
  sol.outcome.length = best;
  sol.outcome.pair = best_pair;
  return sol;
}

void attach_witness(const SymbolString& a, const SymbolString& b, const SymbolString& p,
                    StrIcLcsOutcome& outcome) {
  if (!outcome.has_solution()) {
    outcome.witness.reset();
    return;
  }
  if (p.empty()) {
    outcome.witness = hirschberg_lcs(a, b);
    return;
  }
  if (!outcome.pair) {
    throw std::invalid_argument("attach_witness: outcome carries no interval pair");
  }
  const auto [ia, ib] = *outcome.pair;
  const std::string_view av = a.view();
  const std::string_view bv = b.view();
  std::string w = hirschberg_lcs(av.substr(0, static_cast<std::size_t>(ia.begin - 1)),
                                 bv.substr(0, static_cast<std::size_t>(ib.begin - 1)))
                      .str();
  w += p.str();
  w += hirschberg_lcs(av.substr(static_cast<std::size_t>(ia.end)),
                      bv.substr(static_cast<std::size_t>(ib.end)))
           .str();
  outcome.witness = SymbolString(std::move(w));
}

StrIcLcsOutcome str_ic_lcs_with_witness(const SymbolString& a, const SymbolString& b,
                                        const SymbolString& p, const SolverOptions& options) {
  StrIcLcsOutcome out = str_ic_lcs_length(a, b, p, options);
  attach_witness(a, b, p, out);
  return out;
}

StrIcLcsOutcome deorowicz_reference(const SymbolString& a, const SymbolString& b,
                                    const SymbolString& p) {
  StrIcLcsOutcome out;
  if (p.empty()) {
    out.length = lcs_table_full(a, b).length();
    return out;
  }
  if (pattern_too_long(a, b, p)) return out;
  const MinimalIntervalSet ia = minimal_intervals(a, p);
  const MinimalIntervalSet ib = minimal_intervals(b, p);
  if (ia.empty() || ib.empty()) return out;

  const LcsTable prefix = lcs_table_full(a, b);
  // suffix.at(k, l) = lcs of the last k symbols of A and the last l of B.
  const LcsTable suffix = lcs_table_full(a.reversed(), b.reversed());
  const int n = a.size();
  const int m = b.size();
  for (const Interval& x : ia) {
    for (const Interval& y : ib) {
      const int len = prefix.at(x.begin - 1, y.begin - 1) + p.size() +
                      suffix.at(n - x.end, m - y.end);
      if (len > out.length) {
        out.length = len;
        out.pair = IntervalPair{x, y};
      }
    }
  }
  return out;
}

std::size_t deorowicz_cells(const SymbolString& a, const SymbolString& b) {
  return 2 * static_cast<std::size_t>(a.size() + 1) * static_cast<std::size_t>(b.size() + 1);
}

StrIcLcsOutcome brute_force(const SymbolString& a, const SymbolString& b, const SymbolString& p) {
  if (a.size() > kBruteForceMaxLength) {
    throw InputTooLarge("brute_force: |A| = " + std::to_string(a.size()) + " exceeds " +
                        std::to_string(kBruteForceMaxLength));
  }
  StrIcLcsOutcome out;
  const auto n = static_cast<unsigned>(a.size());
  std::string z;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) <= out.length) continue;
    z.clear();
    for (unsigned k = 0; k < n; ++k) {
      if ((mask >> k) & 1u) z.push_back(a.str()[k]);
    }
    if (z.find(p.str()) != std::string::npos && is_subsequence(z, b.view())) {
      out.length = static_cast<int>(z.size());
      out.witness = SymbolString(z);
    }
  }
  return out;
}

}  // namespace striclcs
