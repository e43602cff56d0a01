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

#ifndef STRICLCS_LCS_CORE_HPP_
#define STRICLCS_LCS_CORE_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "striclcs/symbol_string.hpp"

namespace striclcs {

/// True iff `pattern` can be obtained from `text` by deleting symbols.
bool is_subsequence(std::string_view pattern, std::string_view text);
inline bool is_subsequence(const SymbolString& pattern, const SymbolString& text) {
  return is_subsequence(pattern.view(), text.view());
}

/// Full (|A|+1) x (|B|+1) prefix-LCS table: at(i, j) = lcs(A[1..i], B[1..j]).
///
/// Quadratic space. Only the reference solver and the test oracles build
/// one; the space-efficient path never does.
class LcsTable {
 public:
  LcsTable(std::string_view a, std::string_view b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int i, int j) const {
    return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
  }
  int length() const { return at(rows_ - 1, cols_ - 1); }
  std::size_t cell_count() const { return cells_.size(); }

 private:
  int rows_;
  int cols_;
  std::vector<std::int32_t> cells_;
};

LcsTable lcs_table_full(const SymbolString& a, const SymbolString& b);

/// lcs(A, B) with two rolling rows over the shorter input.
int lcs_length_linear_space(std::string_view a, std::string_view b);
inline int lcs_length_linear_space(const SymbolString& a, const SymbolString& b) {
  return lcs_length_linear_space(a.view(), b.view());
}

/// An LCS string of A and B in O(|A||B|) time and O(|A|+|B|) space.
///
/// Divide and conquer on the middle row of A. When several split columns of
/// B are optimal the smallest one is taken, so the output is deterministic.
SymbolString hirschberg_lcs(std::string_view a, std::string_view b);
inline SymbolString hirschberg_lcs(const SymbolString& a, const SymbolString& b) {
  return hirschberg_lcs(a.view(), b.view());
}

}  // namespace striclcs

#endif  // STRICLCS_LCS_CORE_HPP_
