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

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace striclcs {
namespace {

using testing::Rng;

const SymbolString kSampleA("bcdababcb");
const SymbolString kSampleB("cbacbaaba");

TEST(SymbolStringTest, SliceUsesOneBasedClosedRanges) {
  const SymbolString s("abcdef");
  EXPECT_EQ(s.slice(2, 4).str(), "bcd");
  EXPECT_TRUE(s.slice(4, 3).empty());
  EXPECT_EQ(s.slice(0, 100).str(), "abcdef");
  EXPECT_EQ(s.at(1), 'a');
  EXPECT_EQ(s.at(6), 'f');
}

TEST(SymbolStringTest, ReverseIsAnInvolution) {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const SymbolString s(rng.string(rng.uniform(0, 20), 4));
    EXPECT_EQ(s.reversed().reversed(), s);
  }
}

TEST(IsSubsequenceTest, Examples) {
  EXPECT_TRUE(is_subsequence(SymbolString("abb"), kSampleA));
  EXPECT_TRUE(is_subsequence(SymbolString(""), SymbolString("xyz")));
  EXPECT_TRUE(is_subsequence(SymbolString(""), SymbolString("")));
  EXPECT_FALSE(is_subsequence(SymbolString("ba"), SymbolString("ab")));
  EXPECT_FALSE(is_subsequence(SymbolString("a"), SymbolString("")));
}

TEST(LcsTableTest, SampleInstance) {
  const LcsTable d = lcs_table_full(kSampleA, kSampleB);
  EXPECT_EQ(d.rows(), 10);
  EXPECT_EQ(d.cols(), 10);
  EXPECT_EQ(d.at(7, 4), 3);
  // lcs = 5, e.g. "cbabb".
  EXPECT_EQ(d.at(9, 9), 5);
  EXPECT_EQ(d.length(), 5);
}

TEST(LcsTableTest, EmptyPrefixRowIsZero) {
  const LcsTable d = lcs_table_full(SymbolString(""), SymbolString("anything"));
  EXPECT_EQ(d.rows(), 1);
  for (int j = 0; j < d.cols(); ++j) EXPECT_EQ(d.at(0, j), 0);
}

TEST(LcsTableTest, StepsAreZeroOrOne) {
  Rng rng(3);
  for (int k = 0; k < 40; ++k) {
    const SymbolString a(rng.string(rng.uniform(0, 30), rng.uniform(1, 4)));
    const SymbolString b(rng.string(rng.uniform(0, 30), rng.uniform(1, 4)));
    const LcsTable d = lcs_table_full(a, b);
    for (int i = 0; i < d.rows(); ++i) {
      for (int j = 0; j < d.cols(); ++j) {
        if (i == 0 || j == 0) {
          ASSERT_EQ(d.at(i, j), 0);
          continue;
        }
        ASSERT_GE(d.at(i, j) - d.at(i - 1, j), 0);
        ASSERT_LE(d.at(i, j) - d.at(i - 1, j), 1);
        ASSERT_GE(d.at(i, j) - d.at(i, j - 1), 0);
        ASSERT_LE(d.at(i, j) - d.at(i, j - 1), 1);
      }
    }
  }
}

TEST(LcsLengthTest, Examples) {
  EXPECT_EQ(lcs_length_linear_space(SymbolString("abc"), SymbolString("abc")), 3);
  EXPECT_EQ(lcs_length_linear_space(SymbolString("abc"), SymbolString("xyz")), 0);
  EXPECT_EQ(lcs_length_linear_space(kSampleA, kSampleB), lcs_table_full(kSampleA, kSampleB).length());
}

TEST(LcsLengthTest, MatchesFullTableSymmetricAndReversalInvariant) {
  Rng rng(5);
  for (int k = 0; k < 300; ++k) {
    const int sigma = rng.uniform(1, 4);
    const std::string a = rng.string(rng.uniform(0, 60), sigma);
    const std::string b = rng.string(rng.uniform(0, 60), sigma);
    const int expected = testing::dp_table(a, b)[a.size()][b.size()];
    ASSERT_EQ(lcs_length_linear_space(a, b), expected) << a << " / " << b;
    ASSERT_EQ(lcs_length_linear_space(b, a), expected);
    ASSERT_EQ(lcs_length_linear_space(testing::reversed(a), testing::reversed(b)), expected);
    ASSERT_EQ(lcs_table_full(SymbolString(a), SymbolString(b)).length(), expected);
  }
}

TEST(HirschbergTest, Examples) {
  EXPECT_EQ(hirschberg_lcs(SymbolString("abc"), SymbolString("abc")).str(), "abc");
  EXPECT_EQ(hirschberg_lcs(SymbolString("abc"), SymbolString("xyz")).str(), "");
  EXPECT_EQ(hirschberg_lcs(SymbolString(""), SymbolString("xyz")).str(), "");
  const SymbolString z = hirschberg_lcs(kSampleA, kSampleB);
  EXPECT_EQ(z.size(), lcs_length_linear_space(kSampleA, kSampleB));
  EXPECT_TRUE(is_subsequence(z, kSampleA));
  EXPECT_TRUE(is_subsequence(z, kSampleB));
}

TEST(HirschbergTest, OutputIsAnOptimalCommonSubsequence) {
  Rng rng(9);
  for (int k = 0; k < 300; ++k) {
    const int sigma = rng.uniform(1, 5);
    const SymbolString a(rng.string(rng.uniform(0, 50), sigma));
    const SymbolString b(rng.string(rng.uniform(0, 50), sigma));
    const SymbolString z = hirschberg_lcs(a, b);
    ASSERT_EQ(z.size(), lcs_length_linear_space(a, b));
    ASSERT_TRUE(testing::naive_is_subsequence(z.str(), a.str()));
    ASSERT_TRUE(testing::naive_is_subsequence(z.str(), b.str()));
  }
}

TEST(HirschbergTest, Deterministic) {
  const SymbolString a("abababbaba");
  const SymbolString b("babbaabab");
  EXPECT_EQ(hirschberg_lcs(a, b), hirschberg_lcs(a, b));
}

}  // namespace
}  // namespace striclcs
