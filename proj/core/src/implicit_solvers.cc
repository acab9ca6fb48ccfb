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

#include "ranklab/implicit_solvers.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>

#include "ranklab/dense_solve.h"
#include "ranklab/direct_scores.h"
#include "ranklab/error.h"

namespace ranklab {
namespace {

constexpr std::array<std::pair<ImplicitKind, std::string_view>, 7> kKindNames = {{
    {ImplicitKind::kZermelo, "zermelo"},
    {ImplicitKind::kKatz, "katz"},
    {ImplicitKind::kLeastSquares, "lsq"},
    {ImplicitKind::kDanielsLinear, "daniels-lin"},
    {ImplicitKind::kDanielsRatio, "daniels-ratio"},
    {ImplicitKind::kCowden, "cowden"},
    {ImplicitKind::kGeneralizedRowSum, "grs"},
}};

double MaxAbs(std::span<const double> v) {
  double out = 0.0;
  for (double x : v) out = std::max(out, std::abs(x));
  return out;
}

void CheckDomain(const ImplicitProcedureSpec& spec, std::span<const double> s) {
  const ImplicitKind kind = spec.kind();
  const bool positive = kind == ImplicitKind::kZermelo || kind == ImplicitKind::kDanielsLinear ||
                        kind == ImplicitKind::kDanielsRatio || kind == ImplicitKind::kCowden;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool ok = std::isfinite(s[i]) && (!positive || s[i] > 0.0) &&
                    (kind != ImplicitKind::kCowden || s[i] < 1.0);
    if (!ok) {
      throw Error(ErrorCode::kDomainViolation,
                  "DomainViolation(" + std::string(ImplicitKindName(kind)) + "," + std::to_string(i + 1) + ")",
                  {static_cast<int>(i) + 1});
    }
  }
}

bool InDomain(const ImplicitProcedureSpec& spec, std::span<const double> s) {
  try {
    CheckDomain(spec, s);
    return true;
  } catch (const Error&) {
    return false;
  }
}

void NormalizeSum(std::vector<double>& s) {
  double total = 0.0;
  for (double v : s) total += v;
  for (double& v : s) v /= total;
}

SolveReport Finish(const ImplicitProcedureSpec& spec, const Profile& profile, const SolverConfig& config,
                   std::vector<double> s, int iterations) {
  SolveReport report;
  report.max_abs_residual = MaxAbs(Residual(spec, profile, s));
  report.converged = report.max_abs_residual <= config.residual_tolerance;
  report.iterations = iterations;
  report.scores = ScoreVector(std::move(s));
  return report;
}

// Runs `update` from `start` until the residual bound holds, the step stalls,
// or the iteration cap is reached. Every iterate must stay in the domain.
SolveReport Iterate(const ImplicitProcedureSpec& spec, const Profile& profile, const SolverConfig& config,
                    std::vector<double> s,
                    const std::function<std::vector<double>(const std::vector<double>&)>& update) {
  if (MaxAbs(Residual(spec, profile, s)) <= config.residual_tolerance) {
    return Finish(spec, profile, config, std::move(s), 0);
  }
  int k = 0;
  while (k < config.max_iterations) {
    ++k;
    std::vector<double> next = update(s);
    if (!InDomain(spec, next)) {
      throw Error(ErrorCode::kPositivityLost,
                  std::string(ImplicitKindName(spec.kind())) + " iterate left the admissible domain at step " +
                      std::to_string(k));
    }
    double step = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) step = std::max(step, std::abs(next[i] - s[i]));
    s = std::move(next);
    if (MaxAbs(Residual(spec, profile, s)) <= config.residual_tolerance) break;
    if (step <= config.step_tolerance) break;
  }
  return Finish(spec, profile, config, std::move(s), k);
}

void RequireFordCondition(const ImplicitProcedureSpec& spec, const Profile& profile) {
  if (!SatisfiesFordCondition(profile)) {
    throw Error(ErrorCode::kFordConditionViolated,
                std::string(ImplicitKindName(spec.kind())) +
                    ": some group of alternatives has no wins or no losses against the rest");
  }
}

SolveReport SolveZermelo(const ImplicitProcedureSpec& spec, const Profile& profile, const SolverConfig& config) {
  RequireFordCondition(spec, profile);
  const int n = profile.alternatives();
  const double m = profile.individuals();
  std::vector<double> wins(n);
  for (int i = 0; i < n; ++i) wins[i] = profile.wins(i);
  // Minorize-maximize update for the Bradley-Terry likelihood.
  auto update = [&](const std::vector<double>& s) {
    std::vector<double> next(n);
    for (int i = 0; i < n; ++i) {
      double denom = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) denom += m / (s[i] + s[j]);
      }
      next[i] = wins[i] / denom;
    }
    NormalizeSum(next);
    return next;
  };
  return Iterate(spec, profile, config, std::vector<double>(n, 1.0 / n), update);
}

SolveReport SolveDanielsLinear(const ImplicitProcedureSpec& spec, const Profile& profile,
                               const SolverConfig& config) {
  RequireFordCondition(spec, profile);
  const int n = profile.alternatives();
  std::vector<double> losses(n);
  for (int i = 0; i < n; ++i) losses[i] = profile.losses(i);
  // Lazy power step; the undamped map can be periodic (n = 2 oscillates).
  auto update = [&](const std::vector<double>& s) {
    std::vector<double> next(n);
    for (int i = 0; i < n; ++i) {
      double gain = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) gain += profile.support(i, j) * s[j];
      }
      next[i] = 0.5 * (s[i] + gain / losses[i]);
    }
    NormalizeSum(next);
    return next;
  };
  return Iterate(spec, profile, config, std::vector<double>(n, 1.0 / n), update);
}

SolveReport SolveDanielsRatio(const ImplicitProcedureSpec& spec, const Profile& profile,
                              const SolverConfig& config) {
  RequireFordCondition(spec, profile);
  const int n = profile.alternatives();
  // Geometric damping of s_i <- sqrt(sum_j A_ij s_j / sum_j A_ji / s_j).
  auto update = [&](const std::vector<double>& s) {
    std::vector<double> next(n);
    for (int i = 0; i < n; ++i) {
      double up = 0.0;
      double down = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        up += profile.support(i, j) * s[j];
        down += profile.support(j, i) / s[j];
      }
      next[i] = std::sqrt(s[i] * std::sqrt(up / down));
    }
    NormalizeSum(next);
    return next;
  };
  return Iterate(spec, profile, config, std::vector<double>(n, 1.0 / n), update);
}

SolveReport SolveCowden(const ImplicitProcedureSpec& spec, const Profile& profile, const SolverConfig& config) {
  RequireFordCondition(spec, profile);
  const int n = profile.alternatives();
  auto update = [&](const std::vector<double>& s) {
    std::vector<double> next(n);
    for (int i = 0; i < n; ++i) {
      double x = 0.0;
      double y = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        x += profile.support(i, j) * s[j];
        y += profile.support(j, i) * (1.0 - s[j]);
      }
      next[i] = 0.5 * (s[i] + x / (x + y));
    }
    NormalizeSum(next);
    return next;
  };
  return Iterate(spec, profile, config, std::vector<double>(n, 1.0 / n), update);
}

SolveReport SolveLinear(const ImplicitProcedureSpec& spec, const Profile& profile, const SolverConfig& config) {
  const int n = profile.alternatives();
  const int m = profile.individuals();
  const std::vector<double> borda = ExtendedBorda(profile).values;
  DenseMatrix a(n);
  std::vector<double> b(n, 0.0);
  switch (spec.kind()) {
    case ImplicitKind::kKatz: {
      const double comparisons = static_cast<double>(m) * (n - 1);
      for (int i = 0; i < n; ++i) {
        const double w = profile.wins(i);
        for (int j = 0; j < n; ++j) {
          if (j != i) a(i, j) = spec.epsilon() * profile.support(i, j);
        }
        a(i, i) = -w / comparisons;
        b[i] = -w;
      }
      break;
    }
    case ImplicitKind::kLeastSquares: {
      // The n equations sum to zero identically; the last one is replaced by
      // the normalization sum s = 0.
      for (int i = 0; i < n - 1; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = j == i ? -static_cast<double>(m) * (n - 1) : m;
        b[i] = -static_cast<double>(m) * n * borda[i];
      }
      for (int j = 0; j < n; ++j) a(n - 1, j) = 1.0;
      break;
    }
    case ImplicitKind::kGeneralizedRowSum: {
      const double gamma = spec.Gamma(n, m);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          a(i, j) = j == i ? -static_cast<double>(m) * (n - 1) - 1.0 / spec.epsilon() : m;
        }
        b[i] = -gamma * borda[i];
      }
      break;
    }
    default:
      throw Error(ErrorCode::kInvalidArgument, "not a linear kind");
  }
  std::vector<double> s = SolveDense(a, b);
  if (spec.kind() == ImplicitKind::kKatz) {
    for (int i = 0; i < n; ++i) {
      if (!(s[i] > 0.0)) {
        throw Error(ErrorCode::kPositivityLost,
                    "katz solution is not positive at alternative " + std::to_string(i + 1), {i + 1});
      }
    }
  }
  return Finish(spec, profile, config, std::move(s), 1);
}

}  // namespace

std::string_view ImplicitKindName(ImplicitKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ImplicitKind> ParseImplicitKind(std::string_view name) {
  for (const auto& [k, label] : kKindNames) {
    if (label == name) return k;
  }
  return std::nullopt;
}

ImplicitProcedureSpec::ImplicitProcedureSpec(ImplicitKind kind, double epsilon) : kind_(kind), epsilon_(epsilon) {
  if (UsesEpsilon() && !(epsilon > 0.0 && std::isfinite(epsilon))) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive and finite");
  }
}

bool ImplicitProcedureSpec::UsesEpsilon() const {
  return kind_ == ImplicitKind::kKatz || kind_ == ImplicitKind::kGeneralizedRowSum;
}

double ImplicitProcedureSpec::Gamma(int n, int m) const { return 1.0 / epsilon_ + static_cast<double>(m) * n; }

double ComparisonTerm(const ImplicitProcedureSpec& spec, double outcome, double opponent_score, double own_score,
                      int n, int m) {
  const double a = outcome;
  const double against = 1.0 - outcome;
  const double sj = opponent_score;
  const double si = own_score;
  const double comparisons = static_cast<double>(m) * (n - 1);
  switch (spec.kind()) {
    case ImplicitKind::kZermelo:
      return a - si / (si + sj);
    case ImplicitKind::kKatz:
      return a * (spec.epsilon() * sj + 1.0 - si / comparisons);
    case ImplicitKind::kLeastSquares:
      return static_cast<double>(m) * n * (a - against) + sj - si;
    case ImplicitKind::kDanielsLinear:
      return a * sj - against * si;
    case ImplicitKind::kDanielsRatio:
      return a * sj / si - against * si / sj;
    case ImplicitKind::kCowden:
      return a * sj * (1.0 - si) - against * si * (1.0 - sj);
    case ImplicitKind::kGeneralizedRowSum:
      return spec.Gamma(n, m) * (a - against) - (si - sj) - si / (spec.epsilon() * comparisons);
  }
  return 0.0;
}

std::vector<double> Residual(const ImplicitProcedureSpec& spec, const Profile& profile,
                             std::span<const double> scores) {
  const int n = profile.alternatives();
  const int m = profile.individuals();
  if (static_cast<int>(scores.size()) != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(n) + " scores, got " + std::to_string(scores.size()));
  }
  CheckDomain(spec, scores);
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int p = 0; p < m; ++p) {
        out[i] += ComparisonTerm(spec, profile.outcome(p, i, j), scores[j], scores[i], n, m);
      }
    }
  }
  return out;
}

SolveReport TrySolve(const ImplicitProcedureSpec& spec, const Profile& profile, const SolverConfig& config) {
  if (!(config.residual_tolerance > 0.0) || config.max_iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "solver tolerance and iteration cap must be positive");
  }
  switch (spec.kind()) {
    case ImplicitKind::kZermelo:
      return SolveZermelo(spec, profile, config);
    case ImplicitKind::kDanielsLinear:
      return SolveDanielsLinear(spec, profile, config);
    case ImplicitKind::kDanielsRatio:
      return SolveDanielsRatio(spec, profile, config);
    case ImplicitKind::kCowden:
      return SolveCowden(spec, profile, config);
    case ImplicitKind::kKatz:
    case ImplicitKind::kLeastSquares:
    case ImplicitKind::kGeneralizedRowSum:
      return SolveLinear(spec, profile, config);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown procedure kind");
}

SolveReport Solve(const ImplicitProcedureSpec& spec, const Profile& profile, const SolverConfig& config) {
  SolveReport report = TrySolve(spec, profile, config);
  if (!report.converged) {
    throw Error(ErrorCode::kNotConverged, std::string(ImplicitKindName(spec.kind())) +
                                              " did not converge: residual " +
                                              std::to_string(report.max_abs_residual) + " after " +
                                              std::to_string(report.iterations) + " iterations");
  }
  return report;
}

ScoreVector GrsClosedForm(const Profile& profile, double epsilon) {
  if (!(epsilon > 0.0 && std::isfinite(epsilon))) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive and finite");
  }
  return ExtendedBorda(profile);
}

bool SatisfiesFordCondition(const Profile& profile) {
  const int n = profile.alternatives();
  auto reaches_all = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        const double w = forward ? profile.support(u, v) : profile.support(v, u);
        if (v != u && !seen[v] && w > 0.0) {
          seen[v] = true;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == n;
  };
  return reaches_all(true) && reaches_all(false);
}

}  // namespace ranklab
