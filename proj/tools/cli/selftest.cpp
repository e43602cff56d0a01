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

#include <sstream>

#include "cli/commands.hpp"
#include "striclcs/lcs_core.hpp"

namespace striclcs::cli {

namespace {

std::string describe(const std::string& what, const std::string& a, const std::string& b,
                     const std::string& p) {
  std::ostringstream out;
  out << what << ": A=\"" << a << "\" B=\"" << b << "\" P=\"" << p << "\"";
  return out.str();
}

std::optional<std::string> check_witness(const StrIcLcsOutcome& out, const SymbolString& a,
                                         const SymbolString& b, const SymbolString& p) {
  if (!out.has_solution()) {
    if (out.witness) return "witness present for a no-solution outcome";
    return std::nullopt;
  }
  if (!out.witness) return "missing witness";
  const SymbolString& w = *out.witness;
  if (w.size() != out.length) return "witness length differs from reported length";
  if (w.str().find(p.str()) == std::string::npos) return "witness does not contain P";
  if (!is_subsequence(w, a) || !is_subsequence(w, b)) return "witness is not a common subsequence";
  return std::nullopt;
}

// Frontier invariants on one pair: a missing F_A cell is always recoverable from
// F_B, and every LCS length is visible through both tables.
std::optional<std::string> check_frontier_lemmas(const SymbolString& a, const SymbolString& b) {
  const LcsTable full = lcs_table_full(a, b);
  const int ell = full.length();
  const FrontierTable fa(a, b, ell);
  const FrontierTable fb(b, a, ell);
  for (int i = 1; i <= a.size(); ++i) {
    for (int j = 1; j <= b.size(); ++j) {
      const int s = full.at(i, j);
      if (s >= 1 && fa.cell(s, i).is_undef() && !fb.cell(s, j).within(i)) {
        return "F_A(" + std::to_string(s) + "," + std::to_string(i) +
               ") undefined and F_B cannot recover it";
      }
    }
  }
  for (int s = 1; s <= ell; ++s) {
    bool visible = false;
    for (int i = 1; i <= a.size() && !visible; ++i) {
      const CellValue v = fa.cell(s, i);
      visible = v.is_finite() && fb.cell(s, v.position()).is_finite();
    }
    if (!visible) return "row " + std::to_string(s) + " has no cell visible in both tables";
  }
  return std::nullopt;
}

}  // namespace

SelftestResult run_selftest(const SelftestConfig& config) {
  SelftestResult res;
  std::mt19937_64 rng(config.seed);
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  auto reference = [&](const SymbolString& a, const SymbolString& b, const SymbolString& p) {
    StrIcLcsOutcome ref = deorowicz_reference(a, b, p);
    if (config.inject_fault && ref.length >= 0) ++ref.length;
    return ref;
  };

  for (int c = 0; c < config.cases; ++c) {
    const int sigma = uniform(1, 4);
    const SymbolString a(random_string(rng, uniform(0, 12), sigma));
    const SymbolString b(random_string(rng, uniform(0, 12), sigma));
    const SymbolString p(random_string(rng, uniform(0, 4), sigma));
    const StrIcLcsOutcome fast = str_ic_lcs_with_witness(a, b, p);
    const StrIcLcsOutcome ref = reference(a, b, p);
    const StrIcLcsOutcome brute = brute_force(a, b, p);
    ++res.small_cases;
    if (fast.length != ref.length || fast.length != brute.length) {
      res.failure = describe("three-way disagreement (space-efficient " +
                                 std::to_string(fast.length) + ", reference " +
                                 std::to_string(ref.length) + ", brute " +
                                 std::to_string(brute.length) + ")",
                             a.str(), b.str(), p.str());
      return res;
    }
    if (auto why = check_witness(fast, a, b, p)) {
      res.failure = describe(*why, a.str(), b.str(), p.str());
      return res;
    }
    if (fast.has_solution()) ++res.witnesses_checked;
  }

  const int mid = config.cases / 5;
  for (int c = 0; c < mid; ++c) {
    const int sigma = uniform(1, 4);
    const SymbolString a(random_string(rng, uniform(13, 60), sigma));
    const SymbolString b(random_string(rng, uniform(13, 60), sigma));
    const SymbolString p(random_string(rng, uniform(0, 5), sigma));
    const StrIcLcsOutcome fast = str_ic_lcs_length(a, b, p);
    const StrIcLcsOutcome ref = reference(a, b, p);
    ++res.mid_cases;
    if (fast.length != ref.length) {
      res.failure = describe("space-efficient " + std::to_string(fast.length) + " vs reference " +
                                 std::to_string(ref.length),
                             a.str(), b.str(), p.str());
      return res;
    }
  }

  const int lemma_pairs = config.cases / 50;
  for (int c = 0; c < lemma_pairs; ++c) {
    const int sigma = uniform(1, 4);
    const SymbolString a(random_string(rng, uniform(0, 40), sigma));
    const SymbolString b(random_string(rng, uniform(0, 40), sigma));
    ++res.lemma_pairs;
    if (auto why = check_frontier_lemmas(a, b)) {
      res.failure = describe(*why, a.str(), b.str(), "");
      return res;
    }
  }
  return res;
}

}  // namespace striclcs::cli
