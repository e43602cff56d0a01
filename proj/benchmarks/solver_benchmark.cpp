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

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "striclcs/frontier.hpp"
#include "striclcs/lcs_core.hpp"
#include "striclcs/solver.hpp"

namespace {

using striclcs::SymbolString;

std::string random_string(std::mt19937_64& rng, int length, int sigma) {
  std::uniform_int_distribution<int> pick(0, sigma - 1);
  std::string s(static_cast<std::size_t>(length), 'a');
  for (char& c : s) c = static_cast<char>('a' + pick(rng));
  return s;
}

// B is A with `edits` substitutions, so lcs(A, B) is close to n.
std::string near_copy(std::mt19937_64& rng, std::string s, int edits, int sigma) {
  std::uniform_int_distribution<std::size_t> at(0, s.size() - 1);
  for (int k = 0; k < edits; ++k) {
    char& c = s[at(rng)];
    c = static_cast<char>('a' + (c - 'a' + 1) % sigma);
  }
  return s;
}

struct Instance {
  SymbolString a, b, p;
};

Instance make_instance(int n, int sigma, int edits) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 7919 + static_cast<std::uint64_t>(edits));
  const std::string a = random_string(rng, n, sigma);
  const std::string b = edits < 0 ? random_string(rng, n, sigma) : near_copy(rng, a, edits, sigma);
  return {SymbolString(a), SymbolString(b), SymbolString(a.substr(static_cast<std::size_t>(n / 3), 8))};
}

void BM_SpaceEfficient(benchmark::State& state) {
  const Instance in = make_instance(static_cast<int>(state.range(0)), 2, -1);
  std::size_t cells = 0;
  for (auto _ : state) {
    const auto sol = striclcs::solve_space_efficient(in.a, in.b, in.p);
    cells = sol.stats.cells_allocated;
    benchmark::DoNotOptimize(sol.outcome.length);
  }
  state.counters["cells"] = static_cast<double>(cells);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpaceEfficient)->RangeMultiplier(2)->Range(256, 4096)->Complexity(benchmark::oNSquared);

void BM_SpaceEfficientDense(benchmark::State& state) {
  const Instance in = make_instance(static_cast<int>(state.range(0)), 2, -1);
  const striclcs::SolverOptions opts{striclcs::OccurrenceMode::kDense};
  for (auto _ : state) {
    benchmark::DoNotOptimize(striclcs::solve_space_efficient(in.a, in.b, in.p, opts).outcome.length);
  }
}
BENCHMARK(BM_SpaceEfficientDense)->RangeMultiplier(2)->Range(256, 4096);

void BM_Deorowicz(benchmark::State& state) {
  const Instance in = make_instance(static_cast<int>(state.range(0)), 2, -1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(striclcs::deorowicz_reference(in.a, in.b, in.p).length);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Deorowicz)->RangeMultiplier(2)->Range(256, 4096)->Complexity(benchmark::oNSquared);

// Near-identical inputs: the frontier tables stay thin.
void BM_SpaceEfficientSimilar(benchmark::State& state) {
  const Instance in = make_instance(static_cast<int>(state.range(0)), 4, 5);
  std::size_t cells = 0;
  for (auto _ : state) {
    const auto sol = striclcs::solve_space_efficient(in.a, in.b, in.p);
    cells = sol.stats.cells_allocated;
    benchmark::DoNotOptimize(sol.outcome.length);
  }
  state.counters["cells"] = static_cast<double>(cells);
}
BENCHMARK(BM_SpaceEfficientSimilar)->RangeMultiplier(4)->Range(1024, 16384);

void BM_FrontierBuild(benchmark::State& state) {
  const Instance in = make_instance(static_cast<int>(state.range(0)), 4, -1);
  const int ell = striclcs::lcs_length_linear_space(in.a, in.b);
  for (auto _ : state) {
    const striclcs::FrontierTable f(in.a, in.b, ell);
    benchmark::DoNotOptimize(f.stored_cells());
  }
}
BENCHMARK(BM_FrontierBuild)->RangeMultiplier(2)->Range(256, 4096);

void BM_Hirschberg(benchmark::State& state) {
  const Instance in = make_instance(static_cast<int>(state.range(0)), 4, -1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(striclcs::hirschberg_lcs(in.a, in.b).size());
  }
}
BENCHMARK(BM_Hirschberg)->RangeMultiplier(2)->Range(256, 2048);

}  // namespace

BENCHMARK_MAIN();
