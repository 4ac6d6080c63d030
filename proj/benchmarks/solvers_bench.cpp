// Copyright 2026 The crnreach Authors
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

#include <vector>

#include "crnreach/random_instances.hpp"
#include "crnreach/reductions.hpp"
#include "crnreach/search.hpp"
#include "crnreach/solvers.hpp"

using namespace crnreach;

namespace {

std::vector<Instance> sample(Instance (*make)(Rng&, const RandomShape&), RandomShape shape, std::size_t n) {
  Rng rng(99);
  std::vector<Instance> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(make(rng, shape));
  return out;
}

void BM_PruneFF1SourceNoVoid(benchmark::State& state) {
  const auto suite = sample(randomFF1SourceNoVoid, {}, 256);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decideFF1SourceNoVoid(suite[k++ % suite.size()]));
}
BENCHMARK(BM_PruneFF1SourceNoVoid);

void BM_OracleFF1SourceNoVoid(benchmark::State& state) {
  const auto suite = sample(randomFF1SourceNoVoid, {}, 256);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decideReachOracle(suite[k++ % suite.size()]));
}
BENCHMARK(BM_OracleFF1SourceNoVoid);

void BM_Void2Matching(benchmark::State& state) {
  const auto suite = sample(randomVoid2, {5, 6, 12}, 64);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decideVoid2Matching(suite[k++ % suite.size()]));
}
BENCHMARK(BM_Void2Matching);

// Volume scales as 2^range; the flow procedure should stay flat.
void BM_BipartiteFlowBinaryCounts(benchmark::State& state) {
  CrnBuilder b;
  b.addRule({{"a", 1}, {"b", 1}}, {});
  b.addRule({{"c", 1}, {"b", 1}}, {});
  b.addRule({{"c", 1}, {"d", 1}}, {});
  const Crn crn = b.build();
  const Count big = Count(1) << state.range(0);
  const Instance inst(crn, crn.configuration({{"a", big}, {"b", big + 7}, {"c", big / 2}, {"d", big / 2 - 7}}),
                      crn.zero());
  for (auto _ : state) benchmark::DoNotOptimize(decideVoid2BipartiteFlow(inst));
}
BENCHMARK(BM_BipartiteFlowBinaryCounts)->Arg(8)->Arg(40)->Arg(200);

void BM_HamPathOracle(benchmark::State& state) {
  Rng rng(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Digraph g = randomDigraph(rng, n, 40);
  const auto gen = genHamPath(g, 0, n - 1, HamPathVariant::Size22);
  for (auto _ : state) benchmark::DoNotOptimize(decideReachOracle(gen.instance));
}
BENCHMARK(BM_HamPathOracle)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
