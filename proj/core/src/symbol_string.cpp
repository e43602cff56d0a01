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

#include "striclcs/symbol_string.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace striclcs {

SymbolString::SymbolString(std::string data) : data_(std::move(data)) {
  if (data_.size() >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
    throw std::length_error("SymbolString: input longer than 2^31-1 symbols");
  }
}

SymbolString SymbolString::slice(int begin, int end) const {
  begin = std::max(begin, 1);
  end = std::min(end, size());
  if (begin > end) return SymbolString();
  return SymbolString(data_.substr(static_cast<std::size_t>(begin - 1),
                                   static_cast<std::size_t>(end - begin + 1)));
}

SymbolString SymbolString::reversed() const {
  return SymbolString(std::string(data_.rbegin(), data_.rend()));
}

}  // namespace striclcs
