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

#ifndef RANKLAB_IMPLICIT_SOLVERS_H_
#define RANKLAB_IMPLICIT_SOLVERS_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ranklab/profile.h"

namespace ranklab {

// Scoring procedures defined as the solution of n equations
//
//   sum_{j != i} sum_p h(a_ij^p, s_j, s_i) = 0,   i = 1..n,
//
// where h increases in the outcome and in the opponent score and decreases
// in the own score. The per-kind h is ComparisonTerm below.
enum class ImplicitKind {
  kZermelo,            // a - s_i / (s_i + s_j); s > 0, sum s = 1
  kKatz,               // a (eps s_j + 1 - s_i / (m (n-1))); eps > 0
  kLeastSquares,       // mn (a - a') + s_j - s_i; sum s = 0
  kDanielsLinear,      // a s_j - a' s_i; s > 0
  kDanielsRatio,       // a s_j / s_i - a' s_i / s_j; s > 0
  kCowden,             // a s_j (1 - s_i) - a' s_i (1 - s_j); 0 < s < 1
  kGeneralizedRowSum,  // gamma (a - a') - (s_i - s_j) - s_i / (eps m (n-1))
};

std::string_view ImplicitKindName(ImplicitKind kind);
std::optional<ImplicitKind> ParseImplicitKind(std::string_view name);

class ImplicitProcedureSpec {
 public:
  // `epsilon` is only read for kKatz and kGeneralizedRowSum, where it must be
  // positive and finite (kInvalidArgument).
  explicit ImplicitProcedureSpec(ImplicitKind kind, double epsilon = 1.0);

  ImplicitKind kind() const { return kind_; }
  double epsilon() const { return epsilon_; }
  bool UsesEpsilon() const;

  // 1/eps + m n for the given profile dimensions.
  double Gamma(int n, int m) const;

 private:
  ImplicitKind kind_;
  double epsilon_;
};

struct SolverConfig {
  double residual_tolerance = 1e-10;
  int max_iterations = 10000;
  // Iterations also stop once the largest score change falls below this;
  // the report is then converged only if the residual bound also holds.
  double step_tolerance = 1e-14;
};

struct SolveReport {
  ScoreVector scores;
  int iterations = 0;
  double max_abs_residual = 0.0;
  bool converged = false;
};

// h(a_ij, s_j, s_i) for one comparison, with a_ji = 1 - a_ij. n and m are the
// profile dimensions; they enter the Katz, least-squares and row-sum terms.
double ComparisonTerm(const ImplicitProcedureSpec& spec, double outcome, double opponent_score,
                      double own_score, int n, int m);

// Left-hand sides of the n equations at `scores`. Errors: kDimensionMismatch
// on a length mismatch; kDomainViolation when a score lies outside the kind's
// domain (s > 0 for Zermelo and both Daniels kinds, 0 < s < 1 for Cowden).
std::vector<double> Residual(const ImplicitProcedureSpec& spec, const Profile& profile,
                             std::span<const double> scores);

// Solves the system and reports convergence without throwing on an iteration
// cap. Structural failures still throw: kFordConditionViolated,
// kSingularSystem, kPositivityLost.
SolveReport TrySolve(const ImplicitProcedureSpec& spec, const Profile& profile,
                     const SolverConfig& config = {});

// As TrySolve, and additionally throws kNotConverged when the report did
// not converge.
SolveReport Solve(const ImplicitProcedureSpec& spec, const Profile& profile,
                  const SolverConfig& config = {});

// Row-sum scores on complete profiles in closed form: the extended Borda
// scores, for every eps > 0. Independent of the linear solve in Solve().
ScoreVector GrsClosedForm(const Profile& profile, double epsilon);

// True when every bipartition of the alternatives has positive aggregate
// outcome in both directions (strong connectivity of the positive-win graph).
bool SatisfiesFordCondition(const Profile& profile);

}  // namespace ranklab

#endif  // RANKLAB_IMPLICIT_SOLVERS_H_
