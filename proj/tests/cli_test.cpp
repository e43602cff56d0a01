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

#include "cli/commands.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"

namespace striclcs::cli {
namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "striclcs");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = run_main(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json record(const CliRun& r) {
  std::istringstream lines(r.out);
  std::string first;
  std::getline(lines, first);
  return nlohmann::json::parse(first);
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    path_ = std::filesystem::temp_directory_path() /
            ("striclcs_cli_test_" + std::to_string(counter_++) + ".txt");
    std::ofstream(path_, std::ios::binary) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

TEST(CliSolveTest, SampleInstanceWithWitness) {
  const CliRun r = run({"solve", "--a", "bcdababcb", "--b", "cbacbaaba", "--p", "abb", "--witness",
                     "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = record(r);
  const int brute = brute_force(SymbolString("bcdababcb"), SymbolString("cbacbaaba"),
                                SymbolString("abb"))
                        .length;
  EXPECT_EQ(j["length"], brute);
  const std::string w = j["witness"];
  EXPECT_EQ(static_cast<int>(w.size()), brute);
  EXPECT_NE(w.find("abb"), std::string::npos);
  EXPECT_TRUE(testing::naive_is_subsequence(w, "bcdababcb"));
  EXPECT_TRUE(testing::naive_is_subsequence(w, "cbacbaaba"));
  for (const char* key : {"length", "witness", "pair", "ell", "cells_allocated", "quadratic_cells",
                          "elapsed_ns", "algo"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["quadratic_cells"], 100);
  EXPECT_EQ(j["algo"], "space-efficient");
}

TEST(CliSolveTest, EmptyPatternAndNoSolution) {
  CliRun r = run({"solve", "--a", "abc", "--b", "abc", "--p", "", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(record(r)["length"], 3);

  r = run({"solve", "--a", "abc", "--b", "abc", "--p", "xyz", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(record(r)["length"], -1);
  EXPECT_FALSE(record(r).contains("pair"));
}

TEST(CliSolveTest, AlgorithmSelector) {
  for (const char* algo : {"space-efficient", "deorowicz", "brute"}) {
    const CliRun r = run({"solve", "--a", "bcdababcb", "--b", "cbacbaaba", "--p", "abb", "--algo",
                       algo, "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(record(r)["length"], 5) << algo;
    EXPECT_EQ(record(r)["algo"], algo);
  }
  EXPECT_EQ(run({"solve", "--a", "a", "--b", "a", "--p", "a", "--algo", "fast"}).code, 2);
}

TEST(CliSolveTest, ReadsStdinAndFiles) {
  CliRun r = run({"solve", "--format", "json"}, "abc\nabc\nb\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(record(r)["length"], 3);

  const TempFile fa("bcdababcb\n");
  const TempFile fb("cbacbaaba\r\n");
  r = run({"solve", "--a-file", fa.path(), "--b-file", fb.path(), "--p", "abb", "--format",
           "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(record(r)["length"], 5);
  EXPECT_EQ(read_input_file(fa.path()), "bcdababcb");
  EXPECT_EQ(read_input_file(fb.path()), "cbacbaaba");

  // Mixed: A inline, B and P from stdin in that order.
  r = run({"solve", "--a", "abc", "--format", "json"}, "abc\n\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(record(r)["length"], 3);
}

TEST(CliSolveTest, InputErrors) {
  CliRun r = run({"solve", "--a", "abc"}, "");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("missing input"), std::string::npos);

  r = run({"solve", "--a-file", "/nonexistent/striclcs/input", "--b", "a", "--p", "a"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("cannot read"), std::string::npos);

  EXPECT_EQ(run({"solve", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  // Brute force refuses |A| > 15.
  EXPECT_EQ(run({"solve", "--a", std::string(20, 'a'), "--b", "a", "--p", "a", "--algo", "brute"})
                .code,
            2);
}

TEST(CliSolveTest, StructuredOutputIsDeterministicWithoutTiming) {
  const std::vector<std::string> args{"solve", "--a", "bcdababcb", "--b", "cbacbaaba", "--p",
                                      "abb",   "--witness", "--format", "json", "--no-timing"};
  const CliRun first = run(args);
  const CliRun second = run(args);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(record(first)["elapsed_ns"], 0);
}

TEST(CliBenchTest, RejectsDegenerateSizes) {
  EXPECT_EQ(run({"bench", "--sizes", "0"}).code, 2);
  EXPECT_EQ(run({"bench", "--sizes", "-3"}).code, 2);
  EXPECT_EQ(run({"bench"}).code, 2);
  EXPECT_EQ(run({"bench", "--sizes", "x"}).code, 2);
}

TEST(CliBenchTest, FewMutationsGiveLinearTableStorage) {
  const CliRun r = run({"bench", "--sizes", "1000", "--mutations", "5", "--format", "json",
                     "--reps", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = record(r);
  EXPECT_EQ(j["n"], 1000);
  EXPECT_GE(j["ell"].get<int>(), 1000 - 5);
  EXPECT_LE(j["cells_allocated"].get<std::uint64_t>(), 50u * 1000u);
  EXPECT_GT(j["quadratic_cells"].get<std::uint64_t>(), 1000u * 1000u);
}

TEST(CliBenchTest, DeterministicUnderAFixedSeed) {
  const std::vector<std::string> args{"bench", "--sizes", "50,100", "--seed", "9",
                                      "--format", "json", "--no-timing"};
  const CliRun first = run(args);
  const CliRun second = run(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, second.out);
}

TEST(CliBenchTest, SlopeFit) {
  const std::vector<double> xs{100, 200, 400, 800};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(3.0 * x * x);
  ASSERT_TRUE(fit_loglog_slope(xs, ys).has_value());
  EXPECT_NEAR(*fit_loglog_slope(xs, ys), 2.0, 1e-9);
  EXPECT_FALSE(fit_loglog_slope({100}, {1}).has_value());
}

TEST(CliSelftestTest, PassesAndCatchesAnInjectedFault) {
  CliRun r = run({"selftest", "--cases", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ok"), std::string::npos);

  r = run({"selftest", "--cases", "500", "--seed", "42"});
  EXPECT_EQ(r.code, 0) << r.err;

  r = run({"selftest", "--cases", "200", "--seed", "42", "--inject-fault"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("A=\""), std::string::npos);
}

TEST(CliDumpTableTest, RendersTheRequestedTable) {
  CliRun r = run({"dump-table", "--a", "bcdababcb", "--b", "cbacbaaba"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("lcs = 5"), std::string::npos);
  EXPECT_NE(r.out.find("diagonals = 5"), std::string::npos);

  r = run({"dump-table", "--a", "bcdababcb", "--b", "cbacbaaba", "--table", "fbr"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("X = abaabcabc"), std::string::npos);
  EXPECT_EQ(run({"dump-table", "--a", "x", "--b", "y", "--table", "nope"}).code, 2);
}

}  // namespace
}  // namespace striclcs::cli
