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

#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"

namespace striclcs {
namespace {

using testing::Rng;

TEST(MinimalIntervalsTest, Examples) {
  EXPECT_EQ(minimal_intervals(SymbolString("cbacbaaba"), SymbolString("abb")),
            (MinimalIntervalSet{{3, 8}}));
  EXPECT_EQ(minimal_intervals(SymbolString("bcdababcb"), SymbolString("abb")),
            (MinimalIntervalSet{{4, 7}, {6, 9}}));
  EXPECT_TRUE(minimal_intervals(SymbolString("abc"), SymbolString("d")).empty());
  EXPECT_TRUE(minimal_intervals(SymbolString(""), SymbolString("a")).empty());
}

TEST(MinimalIntervalsTest, SingleSymbolPatternGivesEveryOccurrence) {
  EXPECT_EQ(minimal_intervals(SymbolString("abaca"), SymbolString("a")),
            (MinimalIntervalSet{{1, 1}, {3, 3}, {5, 5}}));
}

TEST(MinimalIntervalsTest, EmptyPatternIsRejected) {
  EXPECT_THROW(minimal_intervals(SymbolString("abc"), SymbolString("")), std::invalid_argument);
}

TEST(MinimalIntervalsTest, MatchesBruteForceAndFormsAnAntichain) {
  Rng rng(17);
  for (int k = 0; k < 400; ++k) {
    const int sigma = rng.uniform(1, 4);
    const std::string s = rng.string(rng.uniform(0, 60), sigma);
    const std::string p = rng.string(rng.uniform(1, 5), sigma);
    const MinimalIntervalSet got = minimal_intervals(SymbolString(s), SymbolString(p));
    ASSERT_EQ(got, testing::brute_minimal_intervals(s, p)) << s << " / " << p;
    ASSERT_LE(got.size(), s.size());
    ASSERT_EQ(got.empty(), !testing::naive_is_subsequence(p, s));
    for (std::size_t x = 1; x < got.size(); ++x) {
      ASSERT_LT(got[x - 1].begin, got[x].begin);
      ASSERT_LT(got[x - 1].end, got[x].end);
    }
  }
}

}  // namespace
}  // namespace striclcs
