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

#include "striclcs/frontier.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace striclcs {

FrontierTable::FrontierTable(const SymbolString& x, const SymbolString& y, int ell,
                             OccurrenceMode mode)
    : x_len_(x.size()), y_len_(y.size()), ell_(ell) {
  if (ell < 0 || ell > std::min(x_len_, y_len_)) {
    throw std::invalid_argument("FrontierTable: ell out of range");
  }
  const OccurrenceIndex idx(y, mode);
  const int diagonals = x_len_ - ell_ + 1;

  std::size_t capacity = 0;
  for (int d = 1; d <= diagonals; ++d) {
    capacity += static_cast<std::size_t>(std::min(ell_, x_len_ - d + 1));
  }
  cells_.reserve(capacity);
  diag_offset_.reserve(static_cast<std::size_t>(diagonals) + 1);
  diag_offset_.push_back(0);

  std::size_t prev_begin = 0;
  int prev_len = 0;
  for (int d = 1; d <= diagonals; ++d) {
    const std::size_t begin = cells_.size();
    const int rows = std::min(ell_, x_len_ - d + 1);
    for (int s = 1; s <= rows; ++s) {
      const int i = d + s - 1;
      // f(s-1, i-1) sits just above on this diagonal; row 0 is all zeros.
      const int above = s == 1 ? 0 : cells_.back();
      // f(s, i-1) is row s of the previous diagonal. Anything not stored
      // there is INF: either s > i-1, or that diagonal already ran out.
      std::int32_t best = kInfCell;
      if (s <= prev_len) best = cells_[prev_begin + static_cast<std::size_t>(s - 1)];
      const CellValue hit = idx.next_occurrence(x.at(i), above);
      if (hit.is_finite() && (best == kInfCell || hit.position() < best)) best = hit.position();
      cells_.push_back(best);
      if (best == kInfCell) break;
    }
    prev_begin = begin;
    prev_len = static_cast<int>(cells_.size() - begin);
    if (prev_len > 0 && cells_.back() == kInfCell) --prev_len;
    diag_offset_.push_back(static_cast<std::int64_t>(cells_.size()));
  }
}

std::string FrontierTable::render(const SymbolString& x) const {
  std::ostringstream out;
  constexpr int kWidth = 4;
  auto pad = [&](const std::string& s, int display_width) {
    for (int k = display_width; k < kWidth; ++k) out << ' ';
    out << s;
  };
  pad("s\\i", 3);
  for (int i = 1; i <= x_len_; ++i) pad(std::to_string(i), static_cast<int>(std::to_string(i).size()));
  out << '\n';
  pad("", 0);
  for (int i = 1; i <= x_len_; ++i) {
    const auto c = static_cast<char>(x.at(i));
    pad(std::string(1, c), 1);
  }
  out << '\n';
  for (int s = 1; s <= ell_; ++s) {
    pad(std::to_string(s), static_cast<int>(std::to_string(s).size()));
    for (int i = 1; i <= x_len_; ++i) {
      const CellValue v = cell(s, i);
      pad(to_string(v), v.is_finite() ? static_cast<int>(to_string(v).size()) : 1);
    }
    out << '\n';
  }
  return out.str();
}

int prefix_lcs_query(const FrontierTable& fx, const FrontierTable& fy, int i, int j,
                     ScanCursors& cur) {
  const int ell = fx.ell();
  if (i <= 0 || j <= 0 || ell == 0) return 0;

  const int top = fx.top_defined_row(i);
  ++cur.cells_visited;
  if (fx.cell(top, i).within(j)) {
    // The answer is visible in column i of F_X. The cursor holds the last
    // answer for a smaller j, so it is still within bound.
    int s = std::max(cur.ka1, top);
    while (s < ell) {
      ++cur.cells_visited;
      if (!fx.cell(s + 1, i).within(j)) break;
      ++s;
    }
    cur.ka1 = s;
    return s;
  }

  // The answer is above the top of column i, in the part of F_X that is
  // never built. Read it from column j of F_Y instead.
  int s = std::max(cur.kb1, fy.top_defined_row(j));
  ++cur.cells_visited;
  if (s > ell || !fy.cell(s, j).within(i)) return 0;
  while (s < ell) {
    ++cur.cells_visited;
    if (!fy.cell(s + 1, j).within(i)) break;
    ++s;
  }
  cur.kb1 = s;
  return s;
}

int suffix_lcs_query(const FrontierTable& fxr, const FrontierTable& fyr, int p, int q,
                     ScanCursors& cur) {
  const int ell = fxr.ell();
  const int i = fxr.x_len() - p + 1;
  const int j = fxr.y_len() - q + 1;
  if (i <= 0 || j <= 0 || ell == 0) return 0;

  const int top = fxr.top_defined_row(i);
  ++cur.cells_visited;
  if (fxr.cell(top, i).within(j)) {
    // Walk up from the cursor, which bounds the answer from above.
    int s = std::clamp(cur.ka2, top, ell);
    while (s > top) {
      ++cur.cells_visited;
      if (fxr.cell(s, i).within(j)) break;
      --s;
    }
    cur.ka2 = s;
    return s;
  }

  const int lo = fyr.top_defined_row(j);
  int s = std::min(cur.kb2, ell);
  while (s >= lo) {
    ++cur.cells_visited;
    if (fyr.cell(s, j).within(i)) break;
    --s;
  }
  if (s < lo) s = 0;
  cur.kb2 = s;
  return s;
}

}  // namespace striclcs
