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

#ifndef RANKLAB_AXIOMS_H_
#define RANKLAB_AXIOMS_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ranklab/generator.h"
#include "ranklab/procedures.h"
#include "ranklab/profile.h"

namespace ranklab {

// One comparison outcome of an alternative together with the score of the
// opponent it was obtained against.
struct Performance {
  double outcome = 0.0;
  double opponent_score = 0.0;

  friend auto operator<=>(const Performance&, const Performance&) = default;
};

// All m(n-1) performances of one alternative in one profile.
struct PerformanceMultiset {
  std::vector<Performance> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
};

PerformanceMultiset BuildPerformanceMultiset(const Profile& profile, const ScoreVector& scores, int alternative);

// mapping[u] is the element of the majorized multiset paired with element u
// of the majorizing one; every pair dominates in both components.
struct MajorizationWitness {
  std::vector<int> mapping;
  bool strict = false;
};

// Witness that `u` majorizes `v`, or nullopt. A dominance matching is found
// by augmenting paths; it is strict exactly when the multisets differ, since
// a dominance matching between equal multisets must pair equal elements
// (componentwise sums) and a matching of unequal multisets cannot consist of
// equalities only. Errors: kCardinalityMismatch.
std::optional<MajorizationWitness> Majorizes(const PerformanceMultiset& u, const PerformanceMultiset& v);

enum class ViolationKind { kWeak, kStrict };

// Alternative i of profile_a majorizes alternative j of profile_b, but the
// scores do not respect it.
struct ViolationReport {
  Profile profile_a;
  Profile profile_b;
  int i = 0;
  int j = 0;
  ViolationKind kind = ViolationKind::kWeak;
  MajorizationWitness witness;
  ScoreVector scores_a;
  ScoreVector scores_b;
};

// Every ordered (i, j) with i in `a` and j in `b` is examined: majorization
// requires s_i >= s'_j - tol, strict majorization s_i > s'_j + tol, where
// tol is the larger of the two score tolerances. `b` may equal `a`.
std::vector<ViolationReport> CheckSelfConsistency(const ProcedureHandle& procedure, const Profile& a,
                                                  const Profile& b);
std::vector<ViolationReport> CheckSelfConsistency(const Profile& a, const ScoreVector& scores_a, const Profile& b,
                                                  const ScoreVector& scores_b);

// Re-runs the procedure on the embedded profiles and confirms the reported
// majorization and score gap.
bool ReplayViolation(const ViolationReport& report, const ProcedureHandle& procedure);

enum class Axiom {
  kSelfConsistency,
  kReinforcement,
  kCancellation,
  kFaithfulness,
  kNeutrality,
  kAnonymity,
  kMonotonicity,
};

std::string_view AxiomName(Axiom axiom);
std::optional<Axiom> ParseAxiom(std::string_view name);
const std::vector<Axiom>& AllAxioms();

struct FuzzOptions {
  int trials = 1000;
  std::uint64_t seed = 0;
  // Dimension ranges and outcome mode; its own seed field is ignored, every
  // trial draws from DeriveSeed(seed, trial).
  GeneratorConfig generator;
  double tolerance = kDefaultTolerance;
  int threads = 1;
  // Cap on stored violations; all violating trials are still counted.
  int max_reports = 16;
};

struct AxiomViolation {
  int trial = 0;
  std::string detail;
  std::vector<Profile> profiles;
  std::vector<ScoreVector> scores;
  std::optional<ViolationReport> self_consistency;
};

struct FuzzSummary {
  Axiom axiom = Axiom::kSelfConsistency;
  std::string procedure;
  int trials = 0;
  int violating_trials = 0;
  std::int64_t checks = 0;
  int strict_violations = 0;
  std::vector<AxiomViolation> violations;

  bool passed() const { return violating_trials == 0; }
};

// Randomized falsification of one axiom; deterministic for a fixed seed and
// independent of `threads`.
//
//   self-consistency  pairs (A, B) of equal dimensions; all four ordered
//                     profile combinations are checked
//   reinforcement     s(A + B) = s(A) + s(B) entrywise
//   cancellation      A = B + transpose(B), sometimes with an all-ties
//                     individual; all alternatives must tie
//   faithfulness      one random linear order; the score ranking must be
//                     that order
//   neutrality        relabeled alternatives relabel the scores
//   anonymity         reordered individuals leave scores unchanged
//   monotonicity      one outcome a_ij^p is raised (complement lowered);
//                     s_i must not fall and no alternative that i beat may
//                     overtake it
//
// Errors: kUnsupportedAxiomForProcedure for faithfulness on a procedure that
// is not defined on crisp single-individual profiles; procedure errors
// propagate.
FuzzSummary FuzzAxiom(const ProcedureHandle& procedure, Axiom axiom, const FuzzOptions& options);

}  // namespace ranklab

#endif  // RANKLAB_AXIOMS_H_
