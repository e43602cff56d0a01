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

#include "striclcs/intervals.hpp"

#include <stdexcept>

namespace striclcs {

MinimalIntervalSet minimal_intervals(const SymbolString& text, const SymbolString& pattern) {
  if (pattern.empty()) {
    throw std::invalid_argument("minimal_intervals: pattern must be non-empty");
  }
  const int n = text.size();
  const int r = pattern.size();
  MinimalIntervalSet out;

  int start = 1;
  while (start <= n) {
    // Least end e such that pattern is a subsequence of text[start..e].
    int k = 1;
    int pos = start;
    for (; pos <= n && k <= r; ++pos) {
      if (text.at(pos) == pattern.at(k)) ++k;
    }
    if (k <= r) break;
    const int end = pos - 1;

    // Greatest begin b such that pattern is a subsequence of text[b..end].
    k = r;
    pos = end;
    for (; k >= 1; --pos) {
      if (text.at(pos) == pattern.at(k)) --k;
    }
    const int begin = pos + 1;

    out.push_back(Interval{begin, end});
    start = begin + 1;
  }
  return out;
}

}  // namespace striclcs
