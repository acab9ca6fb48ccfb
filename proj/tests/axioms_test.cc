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

#include "ranklab/axioms.h"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "oracles/oracles.h"
#include "ranklab/direct_scores.h"
#include "ranklab/error.h"
#include "ranklab/generator.h"
#include "ranklab/matching.h"
#include "ranklab/procedures.h"
#include "test_util.h"

namespace ranklab {
namespace {

using testing::Zero;

PerformanceMultiset Multiset(std::vector<Performance> pairs) { return PerformanceMultiset{std::move(pairs)}; }

std::vector<oracle::Pair> Raw(const PerformanceMultiset& u) {
  std::vector<oracle::Pair> out;
  for (const Performance& p : u.pairs) out.push_back({p.outcome, p.opponent_score});
  return out;
}

TEST(MatchingTest, BitmaskAgreesWithGeneric) {
  Rng rng(2);
  for (int t = 0; t < 2000; ++t) {
    const int size = rng.Int(1, 8);
    std::vector<std::uint64_t> adj(size, 0);
    for (int l = 0; l < size; ++l) {
      for (int r = 0; r < size; ++r) {
        if (rng.Open01() < 0.45) adj[l] |= std::uint64_t{1} << r;
      }
    }
    const auto generic = FindPerfectMatching(size, [&](int l, int r) { return (adj[l] >> r) & 1; });
    EXPECT_EQ(HasPerfectMatching(adj), generic.has_value());
    if (generic) {
      std::vector<bool> used(size, false);
      for (int l = 0; l < size; ++l) {
        EXPECT_TRUE((adj[l] >> (*generic)[l]) & 1);
        EXPECT_FALSE(used[(*generic)[l]]);
        used[(*generic)[l]] = true;
      }
    }
  }
  EXPECT_THROW(HasPerfectMatching(std::vector<std::uint64_t>(65, ~0ull)), Error);
}

TEST(PerformanceTest, Examples) {
  const Profile two = testing::TwoByOne(0.75);
  const PerformanceMultiset u = BuildPerformanceMultiset(two, ScoreVector({0.75, 0.25}), 0);
  ASSERT_EQ(u.size(), 1);
  EXPECT_EQ(u.pairs[0], (Performance{0.75, 0.25}));

  const Profile order = FromLinearOrders({Zero({1, 2, 3})});
  PerformanceMultiset v = BuildPerformanceMultiset(order, ScoreVector({2, 0, -2}), 1);
  std::sort(v.pairs.begin(), v.pairs.end());
  EXPECT_EQ(v.pairs, (std::vector<Performance>{{0, 2}, {1, -2}}));

  ProfileGenerator gen(testing::Config(GeneratorMode::kInterior, 6, 4, 1));
  for (int t = 0; t < 50; ++t) {
    const Profile p = gen.Next();
    EXPECT_EQ(BuildPerformanceMultiset(p, ExtendedBorda(p), 0).size(), p.individuals() * (p.alternatives() - 1));
  }
}

TEST(MajorizationTest, Examples) {
  auto w = Majorizes(Multiset({{1, 0.5}, {0.5, 0.2}}), Multiset({{1, 0.4}, {0.4, 0.2}}));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->strict);
  const PerformanceMultiset same = Multiset({{0.3, 1}, {0.7, -1}, {0.3, 1}});
  w = Majorizes(same, same);
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(w->strict);
  EXPECT_FALSE(Majorizes(Multiset({{1, 0}, {0, 1}}), Multiset({{1, 1}, {0, 0}})).has_value());
  try {
    Majorizes(Multiset({{1, 0}}), Multiset({{1, 0}, {0, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCardinalityMismatch);
  }
}

TEST(MajorizationTest, WitnessMappingDominates) {
  Rng rng(3);
  for (int t = 0; t < 500; ++t) {
    const int size = rng.Int(1, 6);
    PerformanceMultiset u;
    PerformanceMultiset v;
    for (int k = 0; k < size; ++k) {
      v.pairs.push_back({rng.Int(0, 2) / 2.0, static_cast<double>(rng.Int(-1, 1))});
      u.pairs.push_back({std::min(1.0, v.pairs.back().outcome + rng.Int(0, 1) / 2.0),
                         v.pairs.back().opponent_score + rng.Int(0, 1)});
    }
    const std::vector<int> shuffle = rng.Permutation(size);
    PerformanceMultiset shuffled;
    for (int k : shuffle) shuffled.pairs.push_back(v.pairs[k]);
    const auto w = Majorizes(u, shuffled);
    ASSERT_TRUE(w.has_value());
    for (int k = 0; k < size; ++k) {
      EXPECT_GE(u.pairs[k].outcome, shuffled.pairs[w->mapping[k]].outcome);
      EXPECT_GE(u.pairs[k].opponent_score, shuffled.pairs[w->mapping[k]].opponent_score);
    }
  }
}

TEST(MajorizationTest, AgreesWithPairingEnumeration) {
  Rng rng(5);
  int found = 0;
  int strict = 0;
  for (int t = 0; t < 3000; ++t) {
    const int size = rng.Int(1, 6);
    PerformanceMultiset u;
    PerformanceMultiset v;
    for (int k = 0; k < size; ++k) {
      u.pairs.push_back({rng.Int(0, 2) / 2.0, static_cast<double>(rng.Int(0, 2))});
      v.pairs.push_back({rng.Int(0, 2) / 2.0, static_cast<double>(rng.Int(0, 2))});
    }
    if (rng.Int(0, 3) == 0) v = u;
    const auto w = Majorizes(u, v);
    const oracle::PairingResult o = oracle::EnumeratePairings(Raw(u), Raw(v));
    ASSERT_EQ(w.has_value(), o.exists);
    if (w) {
      EXPECT_EQ(w->strict, o.strict);
      ++found;
      strict += o.strict ? 1 : 0;
    }
  }
  EXPECT_GT(found, 100);
  EXPECT_GT(strict, 50);
}

TEST(SelfConsistencyTest, SameAlternativeNeverViolates) {
  ProfileGenerator gen(testing::Config(GeneratorMode::kInterior, 4, 3, 6));
  const ProcedureHandle zero = MakeProcedure("constant-zero");
  for (int t = 0; t < 100; ++t) {
    const Profile p = gen.Next();
    for (const ViolationReport& r : CheckSelfConsistency(zero, p, p)) EXPECT_NE(r.i, r.j);
  }
}

TEST(SelfConsistencyTest, ConsistentProceduresHaveNoViolations) {
  FuzzOptions options;
  options.trials = 400;
  options.seed = 17;
  options.generator = testing::Config(GeneratorMode::kInterior, 4, 3, 0);
  for (const char* name : {"borda", "grs", "zermelo", "daniels-lin", "lsq", "daniels-ratio", "cowden"}) {
    const FuzzSummary s = FuzzAxiom(MakeProcedure(name), Axiom::kSelfConsistency, options);
    EXPECT_TRUE(s.passed()) << name << ": " << (s.violations.empty() ? "" : s.violations.front().detail);
    EXPECT_GT(s.checks, 0);
  }
}

TEST(SelfConsistencyTest, NegativeControlsAreCaughtAndReplay) {
  FuzzOptions options;
  options.trials = 200;
  options.seed = 18;
  for (const char* name : {"constant-zero", "reversed-borda"}) {
    const ProcedureHandle proc = MakeProcedure(name);
    const FuzzSummary s = FuzzAxiom(proc, Axiom::kSelfConsistency, options);
    EXPECT_FALSE(s.passed()) << name;
    EXPECT_GT(s.strict_violations, 0) << name;
    ASSERT_FALSE(s.violations.empty());
    for (const AxiomViolation& v : s.violations) {
      ASSERT_TRUE(v.self_consistency.has_value());
      EXPECT_TRUE(ReplayViolation(*v.self_consistency, proc));
    }
  }
}

TEST(SelfConsistencyTest, ReplayRejectsWrongProcedure) {
  FuzzOptions options;
  options.trials = 50;
  options.seed = 19;
  const FuzzSummary s = FuzzAxiom(MakeProcedure("constant-zero"), Axiom::kSelfConsistency, options);
  ASSERT_FALSE(s.violations.empty());
  EXPECT_FALSE(ReplayViolation(*s.violations.front().self_consistency, MakeProcedure("borda")));
}

TEST(FuzzTest, BordaPassesEveryAxiom) {
  FuzzOptions options;
  options.trials = 300;
  options.seed = 20;
  const ProcedureHandle borda = MakeProcedure("borda");
  for (Axiom a : AllAxioms()) {
    const FuzzSummary s = FuzzAxiom(borda, a, options);
    EXPECT_TRUE(s.passed()) << AxiomName(a) << ": " << (s.violations.empty() ? "" : s.violations.front().detail);
    EXPECT_EQ(s.trials, 300);
  }
}

TEST(FuzzTest, ReversedBordaFailsMonotonicity) {
  FuzzOptions options;
  options.trials = 100;
  options.seed = 21;
  EXPECT_FALSE(FuzzAxiom(MakeProcedure("reversed-borda"), Axiom::kMonotonicity, options).passed());
  EXPECT_FALSE(FuzzAxiom(MakeProcedure("reversed-borda"), Axiom::kFaithfulness, options).passed());
  EXPECT_FALSE(FuzzAxiom(MakeProcedure("constant-zero"), Axiom::kFaithfulness, options).passed());
}

TEST(FuzzTest, FaithfulnessUnsupportedForZermelo) {
  FuzzOptions options;
  options.trials = 5;
  try {
    FuzzAxiom(MakeProcedure("zermelo"), Axiom::kFaithfulness, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedAxiomForProcedure);
  }
}

TEST(FuzzTest, IndependentOfThreadCount) {
  FuzzOptions options;
  options.trials = 120;
  options.seed = 22;
  const ProcedureHandle zero = MakeProcedure("constant-zero");
  const FuzzSummary one = FuzzAxiom(zero, Axiom::kSelfConsistency, options);
  options.threads = 4;
  const FuzzSummary four = FuzzAxiom(zero, Axiom::kSelfConsistency, options);
  EXPECT_EQ(one.violating_trials, four.violating_trials);
  EXPECT_EQ(one.checks, four.checks);
  EXPECT_EQ(one.strict_violations, four.strict_violations);
  ASSERT_EQ(one.violations.size(), four.violations.size());
  for (std::size_t k = 0; k < one.violations.size(); ++k) {
    EXPECT_EQ(one.violations[k].trial, four.violations[k].trial);
    EXPECT_EQ(one.violations[k].detail, four.violations[k].detail);
  }
}

TEST(AxiomNamesTest, RoundTrip) {
  for (Axiom a : AllAxioms()) EXPECT_EQ(ParseAxiom(AxiomName(a)), a);
  EXPECT_FALSE(ParseAxiom("additivity-ish").has_value());
}

}  // namespace
}  // namespace ranklab
