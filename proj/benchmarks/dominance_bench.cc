// Copyright 2026 The RankLab Authors.
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

#include <vector>

#include "benchmark/benchmark.h"
#include "ranklab/axioms.h"
#include "ranklab/generator.h"
#include "ranklab/paretian.h"
#include "ranklab/procedures.h"

namespace ranklab {
namespace {

// u is a coordinatewise improvement of a shuffled v, so a matching exists
// and the search must find it.
void BM_Majorizes(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  Rng rng(11);
  PerformanceMultiset v;
  for (int k = 0; k < size; ++k) v.pairs.push_back({rng.Uniform(0, 1), rng.Uniform(0, 1)});
  PerformanceMultiset u;
  for (int k : rng.Permutation(size)) {
    u.pairs.push_back({v.pairs[k].outcome, v.pairs[k].opponent_score + rng.Uniform(0, 0.1)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(Majorizes(u, v));
}
BENCHMARK(BM_Majorizes)->RangeMultiplier(2)->Range(4, 256);

void BM_ExtensionEvaluate(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Rng rng(12);
  std::vector<Point> points;
  std::vector<double> values;
  while (points.size() < 20) {
    Point z(k);
    for (double& x : z) x = rng.Uniform(-3, 3);
    points.push_back(z);
    if (FindNonParetianPair(points)) {
      points.pop_back();
    } else {
      values.push_back(rng.Uniform(-1, 1));
    }
  }
  const MonotoneExtension f(ParetianSet::Build(points, values));
  Point x(k, 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(f.Evaluate(x));
}
BENCHMARK(BM_ExtensionEvaluate)->DenseRange(2, 6, 2);

void BM_FuzzSelfConsistency(benchmark::State& state) {
  FuzzOptions options;
  options.trials = 1000;
  options.seed = 13;
  options.threads = static_cast<int>(state.range(0));
  const ProcedureHandle borda = MakeProcedure("borda");
  for (auto _ : state) benchmark::DoNotOptimize(FuzzAxiom(borda, Axiom::kSelfConsistency, options));
}
BENCHMARK(BM_FuzzSelfConsistency)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace ranklab
