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

#ifndef STRICLCS_INTERVALS_HPP_
#define STRICLCS_INTERVALS_HPP_

#include <compare>
#include <vector>

#include "striclcs/symbol_string.hpp"

namespace striclcs {

// Closed 1-based range [begin..end] over a string.
struct Interval {
  int begin = 1;
  int end = 0;

  int length() const { return end - begin + 1; }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

// Sorted by begin; begin and end are both strictly increasing.
using MinimalIntervalSet = std::vector<Interval>;

// All minimal intervals [b..e] of `text` such that `pattern` is a
// subsequence of text[b..e] but of neither text[b+1..e] nor text[b..e-1].
//
// Repeated greedy double sweep: match the pattern forward from a start
// position to find the least end, then backward from that end to find the
// greatest begin, emit, and restart one past that begin. O(|text|*|pattern|)
// time. Throws std::invalid_argument on an empty pattern.
MinimalIntervalSet minimal_intervals(const SymbolString& text, const SymbolString& pattern);

}  // namespace striclcs

#endif  // STRICLCS_INTERVALS_HPP_
