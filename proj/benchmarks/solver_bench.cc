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
#include "ranklab/direct_scores.h"
#include "ranklab/generator.h"
#include "ranklab/implicit_solvers.h"
#include "ranklab/profile.h"

namespace ranklab {
namespace {

Profile Interior(int n, int m) {
  GeneratorConfig c;
  c.mode = GeneratorMode::kInterior;
  c.n_min = c.n_max = n;
  c.m_min = c.m_max = m;
  c.seed = 42;
  return ProfileGenerator(c).Next();
}

void BM_ExtendedBorda(benchmark::State& state) {
  const Profile p = Interior(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(ExtendedBorda(p));
}
BENCHMARK(BM_ExtendedBorda)->RangeMultiplier(2)->Range(4, 64);

void BM_Solve(benchmark::State& state, ImplicitKind kind, double eps) {
  const Profile p = Interior(static_cast<int>(state.range(0)), 8);
  const ImplicitProcedureSpec spec(kind, eps);
  for (auto _ : state) benchmark::DoNotOptimize(TrySolve(spec, p));
}
BENCHMARK_CAPTURE(BM_Solve, grs, ImplicitKind::kGeneralizedRowSum, 1.0)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK_CAPTURE(BM_Solve, lsq, ImplicitKind::kLeastSquares, 1.0)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK_CAPTURE(BM_Solve, zermelo, ImplicitKind::kZermelo, 1.0)->RangeMultiplier(2)->Range(4, 32);
BENCHMARK_CAPTURE(BM_Solve, daniels_ratio, ImplicitKind::kDanielsRatio, 1.0)->RangeMultiplier(2)->Range(4, 32);
BENCHMARK_CAPTURE(BM_Solve, cowden, ImplicitKind::kCowden, 1.0)->RangeMultiplier(2)->Range(4, 32);

}  // namespace
}  // namespace ranklab
