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

#include "striclcs/lcs_core.hpp"

#include <algorithm>
#include <string>

namespace striclcs {

bool is_subsequence(std::string_view pattern, std::string_view text) {
  std::size_t k = 0;
  for (std::size_t t = 0; t < text.size() && k < pattern.size(); ++t) {
    if (text[t] == pattern[k]) ++k;
  }
  return k == pattern.size();
}

LcsTable::LcsTable(std::string_view a, std::string_view b)
    : rows_(static_cast<int>(a.size()) + 1),
      cols_(static_cast<int>(b.size()) + 1),
      cells_(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), 0) {
  const auto c = static_cast<std::size_t>(cols_);
  for (std::size_t i = 1; i < static_cast<std::size_t>(rows_); ++i) {
    std::int32_t* row = &cells_[i * c];
    const std::int32_t* up = &cells_[(i - 1) * c];
    for (std::size_t j = 1; j < c; ++j) {
      row[j] = a[i - 1] == b[j - 1] ? up[j - 1] + 1 : std::max(up[j], row[j - 1]);
    }
  }
}

LcsTable lcs_table_full(const SymbolString& a, const SymbolString& b) {
  return LcsTable(a.view(), b.view());
}

int lcs_length_linear_space(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // One row over the shorter string plus the saved diagonal.
  std::vector<std::int32_t> row(b.size() + 1, 0);
  for (char ca : a) {
    std::int32_t diag = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::int32_t up = row[j];
      row[j] = ca == b[j - 1] ? diag + 1 : std::max(up, row[j - 1]);
      diag = up;
    }
  }
  return row.back();
}

namespace {

// out[k] = lcs(a, b[0..k)) for k in [0..|b|].
void forward_row(std::string_view a, std::string_view b, std::vector<std::int32_t>& out) {
  out.assign(b.size() + 1, 0);
  for (char ca : a) {
    std::int32_t diag = 0;
    for (std::size_t k = 1; k <= b.size(); ++k) {
      const std::int32_t up = out[k];
      out[k] = ca == b[k - 1] ? diag + 1 : std::max(up, out[k - 1]);
      diag = up;
    }
  }
}

// out[k] = lcs(a, b[k..|b|)) for k in [0..|b|].
void backward_row(std::string_view a, std::string_view b, std::vector<std::int32_t>& out) {
  const std::size_t m = b.size();
  out.assign(m + 1, 0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    std::int32_t diag = 0;
    for (std::size_t k = m; k-- > 0;) {
      const std::int32_t below = out[k];
      out[k] = *it == b[k] ? diag + 1 : std::max(below, out[k + 1]);
      diag = below;
    }
  }
}

void hirschberg(std::string_view a, std::string_view b, std::string& out) {
  if (a.empty() || b.empty()) return;
  if (a.size() == 1) {
    if (b.find(a[0]) != std::string_view::npos) out.push_back(a[0]);
    return;
  }
  const std::size_t mid = a.size() / 2;
  std::size_t split = 0;
  {
    std::vector<std::int32_t> upper;
    std::vector<std::int32_t> lower;
    forward_row(a.substr(0, mid), b, upper);
    backward_row(a.substr(mid), b, lower);
    std::int32_t best = -1;
    for (std::size_t k = 0; k <= b.size(); ++k) {
      if (upper[k] + lower[k] > best) {
        best = upper[k] + lower[k];
        split = k;
      }
    }
  }
  hirschberg(a.substr(0, mid), b.substr(0, split), out);
  hirschberg(a.substr(mid), b.substr(split), out);
}

}  // namespace

SymbolString hirschberg_lcs(std::string_view a, std::string_view b) {
  std::string out;
  hirschberg(a, b, out);
  return SymbolString(std::move(out));
}

}  // namespace striclcs
