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

#ifndef STRICLCS_SOLVER_HPP_
#define STRICLCS_SOLVER_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>

#include "striclcs/frontier.hpp"
#include "striclcs/intervals.hpp"
#include "striclcs/symbol_string.hpp"

namespace striclcs {

// The interval over A and the interval over B whose prefix/suffix split
// produced the reported length.
struct IntervalPair {
  Interval a;
  Interval b;

  friend bool operator==(const IntervalPair&, const IntervalPair&) = default;
};

// Result of an STR-IC-LCS computation. length == -1 means no common
// subsequence of A and B contains P as a substring; witness and pair are
// then absent.
struct StrIcLcsOutcome {
  int length = -1;
  std::optional<SymbolString> witness;
  std::optional<IntervalPair> pair;

  bool has_solution() const { return length >= 0; }
};

struct SolverOptions {
  OccurrenceMode occurrence = OccurrenceMode::kSparse;
};

// Instrumentation collected by the space-efficient solver.
struct SolverStats {
  int ell = 0;
  std::size_t intervals_a = 0;
  std::size_t intervals_b = 0;
  // Cells stored across the four frontier tables.
  std::size_t cells_allocated = 0;
  // Prefix/suffix query pairs evaluated (|I_A| * |I_B|).
  std::size_t candidate_pairs = 0;
  // Table cells inspected by all prefix and suffix queries.
  std::size_t cells_visited = 0;
};

struct Solution {
  StrIcLcsOutcome outcome;
  SolverStats stats;
};

class InputTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Space-efficient solver: minimal intervals plus four sparse frontier tables
// (A/B forward and reversed), O(n^2) time and O((ell+1)(n-ell+1)) space.
// Fills length and pair only.
Solution solve_space_efficient(const SymbolString& a, const SymbolString& b,
                               const SymbolString& p, const SolverOptions& options = {});

inline StrIcLcsOutcome str_ic_lcs_length(const SymbolString& a, const SymbolString& b,
                                         const SymbolString& p,
                                         const SolverOptions& options = {}) {
  return solve_space_efficient(a, b, p, options).outcome;
}

// Fills in a witness for an outcome produced by any of the solvers on the
// same inputs: Hirschberg on the prefixes before the pair, then P, then
// Hirschberg on the suffixes after it. With an empty P the witness is a
// plain LCS of A and B.
void attach_witness(const SymbolString& a, const SymbolString& b, const SymbolString& p,
                    StrIcLcsOutcome& outcome);

StrIcLcsOutcome str_ic_lcs_with_witness(const SymbolString& a, const SymbolString& b,
                                        const SymbolString& p,
                                        const SolverOptions& options = {});

// Quadratic-space reference: full prefix and suffix LCS tables with O(1)
// lookups per interval pair. Fills length and pair only.
StrIcLcsOutcome deorowicz_reference(const SymbolString& a, const SymbolString& b,
                                    const SymbolString& p);

// Cells held by the two full tables deorowicz_reference allocates.
std::size_t deorowicz_cells(const SymbolString& a, const SymbolString& b);

inline constexpr int kBruteForceMaxLength = 15;

// Enumerates every subsequence of A. Throws InputTooLarge when
// |A| > kBruteForceMaxLength. Fills length and witness.
StrIcLcsOutcome brute_force(const SymbolString& a, const SymbolString& b, const SymbolString& p);

}  // namespace striclcs

#endif  // STRICLCS_SOLVER_HPP_
