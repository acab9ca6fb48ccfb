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

#include "ranklab/permuted_dominance.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "oracles/oracles.h"
#include "ranklab/direct_scores.h"
#include "ranklab/generator.h"
#include "test_util.h"

namespace ranklab {
namespace {

using testing::Zero;

std::vector<double> Row(const Profile& p, int individual, int i) {
  std::vector<double> row;
  for (int j = 0; j < p.alternatives(); ++j) {
    if (j != i) row.push_back(p.outcome(individual, i, j));
  }
  return row;
}

// i dominates j when some pairing of individuals and, within each pair, some
// pairing of opponents works: all individual permutations times brute-force
// rows.
bool BruteForceDominates(const Profile& p, int i, int j) {
  std::vector<int> sigma(p.individuals());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (int k = 0; k < p.individuals() && ok; ++k) {
      ok = oracle::RowDominatesByPermutation(Row(p, k, i), Row(p, sigma[k], j));
    }
    if (ok) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

TEST(PermutedDominanceTest, LinearOrderIsChain) {
  const PermutedDominance d(FromLinearOrders({Zero({1, 2, 3})}));
  EXPECT_TRUE(d.StrictlyDominates(0, 1));
  EXPECT_TRUE(d.StrictlyDominates(1, 2));
  EXPECT_TRUE(d.StrictlyDominates(0, 2));
  EXPECT_FALSE(d.WeaklyDominates(2, 0));
}

TEST(PermutedDominanceTest, CondorcetCycleAllEquivalent) {
  const PermutedDominance d(Profile::FromMatrices(3, 1, {{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_TRUE(d.Equivalent(i, j));
  }
}

TEST(PermutedDominanceTest, SortedRowsMatchPermutationSearch) {
  Rng rng(7);
  for (int t = 0; t < 3000; ++t) {
    const int len = rng.Int(1, 4);
    std::vector<double> a(len);
    std::vector<double> b(len);
    for (int k = 0; k < len; ++k) {
      a[k] = rng.Int(0, 4) / 4.0;
      b[k] = rng.Int(0, 4) / 4.0;
    }
    EXPECT_EQ(SortedRowDominates(a, b), oracle::RowDominatesByPermutation(a, b));
  }
}

TEST(PermutedDominanceTest, MatchesBruteForce) {
  for (GeneratorMode mode : {GeneratorMode::kCrisp, GeneratorMode::kWeakOrder, GeneratorMode::kLinearOrder}) {
    ProfileGenerator gen(testing::Config(mode, 5, 4, 8));
    for (int t = 0; t < 150; ++t) {
      const Profile p = gen.Next();
      const PermutedDominance d(p);
      EXPECT_TRUE(d.IsPartialOrderModuloEquivalence());
      for (int i = 0; i < p.alternatives(); ++i) {
        for (int j = 0; j < p.alternatives(); ++j) EXPECT_EQ(d.WeaklyDominates(i, j), BruteForceDominates(p, i, j));
      }
    }
  }
}

TEST(PermutedDominanceTest, ImpliesEveryPointOrdering) {
  ProfileGenerator gen(testing::Config(GeneratorMode::kLinearOrder, 5, 5, 9, 3));
  for (int t = 0; t < 100; ++t) {
    const Profile p = gen.Next();
    const PermutedDominance d(p);
    for (int w = 0; w < 50; ++w) {
      std::vector<double> points(p.alternatives());
      double level = 0.0;
      for (double& v : points) v = (level += gen.rng().Uniform(0.0, 1.0));
      const ScoreVector s = PointScores(p, PositionalWeights(points));
      for (int i = 0; i < p.alternatives(); ++i) {
        for (int j = 0; j < p.alternatives(); ++j) {
          if (d.WeaklyDominates(i, j)) {
            EXPECT_GE(s[i], s[j] - 1e-12);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace ranklab
