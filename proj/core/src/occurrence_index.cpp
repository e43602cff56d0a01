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

#include "striclcs/frontier.hpp"

namespace striclcs {

std::string to_string(const CellValue& v) {
  switch (v.kind()) {
    case CellValue::Kind::kFinite:
      return std::to_string(v.position());
    case CellValue::Kind::kInf:
      return "\xe2\x88\x9e";  // ∞
    case CellValue::Kind::kUndef:
      break;
  }
  return "\xc2\xb7";  // ·
}

OccurrenceIndex::OccurrenceIndex(const SymbolString& y, OccurrenceMode mode)
    : text_size_(y.size()), mode_(mode) {
  const int n = y.size();
  if (mode == OccurrenceMode::kSparse) {
    // Counting sort of positions by symbol.
    std::array<std::int32_t, 257> count{};
    for (int p = 1; p <= n; ++p) ++count[y.at(p) + 1];
    for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
    offsets_ = count;
    positions_.resize(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p) {
      positions_[static_cast<std::size_t>(count[y.at(p)]++)] = p;
    }
    return;
  }

  code_.fill(-1);
  for (int p = 1; p <= n; ++p) {
    if (code_[y.at(p)] < 0) code_[y.at(p)] = static_cast<std::int16_t>(sigma_++);
  }
  const auto sigma = static_cast<std::size_t>(sigma_);
  dense_.assign(static_cast<std::size_t>(n + 1) * sigma, -1);
  // Row `after` answers queries strictly after position `after`.
  for (int after = n - 1; after >= 0; --after) {
    const auto row = static_cast<std::size_t>(after) * sigma;
    std::copy_n(dense_.begin() + static_cast<std::ptrdiff_t>(row + sigma), sigma,
                dense_.begin() + static_cast<std::ptrdiff_t>(row));
    dense_[row + static_cast<std::size_t>(code_[y.at(after + 1)])] = after + 1;
  }
}

std::vector<int> OccurrenceIndex::positions(Symbol c) const {
  if (mode_ == OccurrenceMode::kSparse) {
    return {positions_.begin() + offsets_[c], positions_.begin() + offsets_[c + 1u]};
  }
  std::vector<int> out;
  for (int after = 0;;) {
    const CellValue v = next_occurrence(c, after);
    if (!v.is_finite()) break;
    out.push_back(v.position());
    after = v.position();
  }
  return out;
}

CellValue OccurrenceIndex::next_occurrence(Symbol c, int after) const {
  if (mode_ == OccurrenceMode::kSparse) {
    const auto first = positions_.begin() + offsets_[c];
    const auto last = positions_.begin() + offsets_[c + 1u];
    const auto it = std::upper_bound(first, last, after);
    return it == last ? CellValue::inf() : CellValue::finite(*it);
  }
  if (code_[c] < 0 || after >= text_size_) return CellValue::inf();
  const std::int32_t p = dense_[static_cast<std::size_t>(after) * static_cast<std::size_t>(sigma_) +
                                static_cast<std::size_t>(code_[c])];
  return p < 0 ? CellValue::inf() : CellValue::finite(p);
}

}  // namespace striclcs
