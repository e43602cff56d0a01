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

#ifndef STRICLCS_SYMBOL_STRING_HPP_
#define STRICLCS_SYMBOL_STRING_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace striclcs {

using Symbol = unsigned char;

// An immutable byte string with 1-based logical indexing.
//
// Positions used throughout the library follow the same convention: S[i]
// is the i-th symbol, S[i..j] is the closed range, and S[i..j] with i > j
// is the empty string.
class SymbolString {
 public:
  SymbolString() = default;
  explicit SymbolString(std::string data);
  explicit SymbolString(std::string_view data) : SymbolString(std::string(data)) {}
  explicit SymbolString(const char* data) : SymbolString(std::string(data)) {}

  int size() const { return static_cast<int>(data_.size()); }
  bool empty() const { return data_.empty(); }

  // 1-based; i must lie in [1..size()].
  Symbol at(int i) const { return static_cast<Symbol>(data_[static_cast<std::size_t>(i - 1)]); }

  // S[begin..end], clamped to the string; empty when begin > end.
  SymbolString slice(int begin, int end) const;
  SymbolString reversed() const;

  std::string_view view() const { return data_; }
  const std::string& str() const { return data_; }

  friend bool operator==(const SymbolString&, const SymbolString&) = default;
  friend auto operator<=>(const SymbolString&, const SymbolString&) = default;

 private:
  std::string data_;
};

}  // namespace striclcs

#endif  // STRICLCS_SYMBOL_STRING_HPP_
