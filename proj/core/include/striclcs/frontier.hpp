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

#ifndef STRICLCS_FRONTIER_HPP_
#define STRICLCS_FRONTIER_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "striclcs/symbol_string.hpp"

namespace striclcs {

// One entry of a frontier table: a 1-based position, INF ("no prefix of Y
// reaches this LCS length"), or UNDEF ("never computed by the sparse
// construction").
class CellValue {
 public:
  enum class Kind : std::uint8_t { kFinite, kInf, kUndef };

  static constexpr CellValue finite(int position) { return CellValue(Kind::kFinite, position); }
  static constexpr CellValue inf() { return CellValue(Kind::kInf, 0); }
  static constexpr CellValue undef() { return CellValue(Kind::kUndef, 0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_inf() const { return kind_ == Kind::kInf; }
  constexpr bool is_undef() const { return kind_ == Kind::kUndef; }
  // Only meaningful when is_finite().
  constexpr int position() const { return position_; }

  // Finite and at most `bound`.
  constexpr bool within(int bound) const { return is_finite() && position_ <= bound; }

  friend constexpr bool operator==(const CellValue&, const CellValue&) = default;

 private:
  constexpr CellValue(Kind kind, int position) : kind_(kind), position_(position) {}

  Kind kind_;
  int position_;
};

std::string to_string(const CellValue& v);

enum class OccurrenceMode : std::uint8_t {
  // Per-symbol sorted position lists, binary search per lookup. O(|Y|) space.
  kSparse,
  // Next-occurrence table over the symbols present in Y. O(|Y| * sigma')
  // space, O(1) lookup. Meant for benchmark runs.
  kDense,
};

// Answers "least position p > after with Y[p] == c".
class OccurrenceIndex {
 public:
  explicit OccurrenceIndex(const SymbolString& y, OccurrenceMode mode = OccurrenceMode::kSparse);

  int text_size() const { return text_size_; }
  OccurrenceMode mode() const { return mode_; }

  // Sorted 1-based positions of `c` in Y.
  std::vector<int> positions(Symbol c) const;

  // Finite(p) for the least p > after with Y[p] == c, else INF.
  // Requires 0 <= after <= |Y|.
  CellValue next_occurrence(Symbol c, int after) const;

  // Entries held by the index (positions or dense slots), for instrumentation.
  std::size_t footprint() const { return positions_.size() + dense_.size(); }

 private:
  int text_size_ = 0;
  OccurrenceMode mode_;
  // Sparse: positions_ grouped by symbol, bucket c spans [offsets_[c], offsets_[c+1]).
  std::array<std::int32_t, 257> offsets_{};
  std::vector<std::int32_t> positions_;
  // Dense: code_[c] is the compacted symbol (or -1); dense_[after*sigma + code].
  std::array<std::int16_t, 256> code_{};
  int sigma_ = 0;
  std::vector<std::int32_t> dense_;
};

inline OccurrenceIndex build_occurrence_index(const SymbolString& y,
                                              OccurrenceMode mode = OccurrenceMode::kSparse) {
  return OccurrenceIndex(y, mode);
}

inline CellValue next_occurrence(const OccurrenceIndex& idx, Symbol c, int after) {
  return idx.next_occurrence(c, after);
}

// Smallest row of column i whose diagonal i-s+1 is at most x_len-ell+1.
constexpr int top_defined_row(int x_len, int ell, int i) {
  const int top = i - x_len + ell;
  return top > 1 ? top : 1;
}

// Sparse Nakatsu table over X against Y.
//
// Cell (s, i) holds the length of the shortest prefix of Y whose LCS with
// X[1..i] is s. Only the first x_len-ell+1 diagonals are built, each down to
// row min(ell, x_len-d+1) or to its first INF, whichever comes first; cells
// outside that parallelogram read as UNDEF. Storage is one flat array of
// diagonals.
class FrontierTable {
 public:
  // `ell` must equal lcs(X, Y).
  FrontierTable(const SymbolString& x, const SymbolString& y, int ell,
                OccurrenceMode mode = OccurrenceMode::kSparse);

  int x_len() const { return x_len_; }
  int y_len() const { return y_len_; }
  int ell() const { return ell_; }
  int diagonal_count() const { return static_cast<int>(diag_offset_.size()) - 1; }

  // Rows stored on diagonal d (1-based), INF cell included.
  int diagonal_length(int d) const {
    return static_cast<int>(diag_offset_[static_cast<std::size_t>(d)] -
                            diag_offset_[static_cast<std::size_t>(d - 1)]);
  }

  // Row s >= 1, column i >= 1 (any values; outside the table is UNDEF).
  CellValue cell(int s, int i) const {
    const int d = i - s + 1;
    if (s < 1 || d < 1 || d > diagonal_count() || s > diagonal_length(d)) {
      return CellValue::undef();
    }
    const std::int32_t v =
        cells_[static_cast<std::size_t>(diag_offset_[static_cast<std::size_t>(d - 1)] + s - 1)];
    return v == kInfCell ? CellValue::inf() : CellValue::finite(v);
  }

  int top_defined_row(int i) const { return striclcs::top_defined_row(x_len_, ell_, i); }

  std::size_t stored_cells() const { return cells_.size(); }

  // Text rendering: one line per row s, one column per i, entries as
  // integers, "∞" for INF and "·" for UNDEF.
  std::string render(const SymbolString& x) const;

 private:
  static constexpr std::int32_t kInfCell = -1;

  int x_len_;
  int y_len_;
  int ell_;
  std::vector<std::int64_t> diag_offset_;
  std::vector<std::int32_t> cells_;
};

inline FrontierTable build_frontier(const SymbolString& x, const SymbolString& y, int ell,
                                    OccurrenceMode mode = OccurrenceMode::kSparse) {
  return FrontierTable(x, y, ell, mode);
}

inline int top_defined_row(const FrontierTable& f, int i) { return f.top_defined_row(i); }

// Monotone row cursors for one batch of queries that shares an outer
// interval. Prefix cursors only move down the table, suffix cursors only up.
struct ScanCursors {
  int ka1 = 1;
  int kb1 = 1;
  int ka2 = 0;
  int kb2 = 0;
  // Table cells inspected by queries that used these cursors.
  std::size_t cells_visited = 0;

  static ScanCursors fresh(int ell) { return ScanCursors{1, 1, ell, ell, 0}; }
};

// lcs(X[1..i], Y[1..j]) from F_X (built over X, Y) and F_Y (built over Y, X).
//
// Within one cursor batch, i must stay fixed and j must be non-decreasing.
int prefix_lcs_query(const FrontierTable& fx, const FrontierTable& fy, int i, int j,
                     ScanCursors& cur);

// lcs(X[p..|X|], Y[q..|Y|]) from tables built over the reversed strings:
// fxr over (X^R, Y^R) and fyr over (Y^R, X^R).
//
// Within one cursor batch, p must stay fixed and q must be non-decreasing
// (the suffix of Y shrinks, so answers never grow).
int suffix_lcs_query(const FrontierTable& fxr, const FrontierTable& fyr, int p, int q,
                     ScanCursors& cur);

}  // namespace striclcs

#endif  // STRICLCS_FRONTIER_HPP_
