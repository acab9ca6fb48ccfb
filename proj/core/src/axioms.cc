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
#include <array>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "ranklab/error.h"
#include "ranklab/matching.h"

namespace ranklab {
namespace {

constexpr std::array<std::pair<Axiom, std::string_view>, 7> kAxiomNames = {{
    {Axiom::kSelfConsistency, "self-consistency"},
    {Axiom::kReinforcement, "reinforcement"},
    {Axiom::kCancellation, "cancellation"},
    {Axiom::kFaithfulness, "faithfulness"},
    {Axiom::kNeutrality, "neutrality"},
    {Axiom::kAnonymity, "anonymity"},
    {Axiom::kMonotonicity, "monotonicity"},
}};

std::string Describe(const ScoreVector& s) {
  std::ostringstream out;
  out.precision(17);
  out << "[";
  for (int i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << "]";
  return out.str();
}

Profile Transposed(const Profile& profile) {
  auto mats = profile.matrices();
  for (auto& a : mats) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) std::swap(a[i][j], a[j][i]);
    }
  }
  return Profile::FromMatrices(profile.alternatives(), profile.individuals(), mats);
}

Profile AllTies(int n) {
  Profile::Matrix a(n, std::vector<double>(n, 0.5));
  for (int i = 0; i < n; ++i) a[i][i] = 0.0;
  return Profile::FromMatrices(n, 1, {a});
}

struct TrialResult {
  std::int64_t checks = 0;
  int strict = 0;
  std::vector<AxiomViolation> violations;
};

class TrialRunner {
 public:
  TrialRunner(const ProcedureHandle& procedure, const FuzzOptions& options)
      : procedure_(procedure), options_(options) {}

  TrialResult Run(Axiom axiom, int trial) const {
    GeneratorConfig config = options_.generator;
    config.seed = DeriveSeed(options_.seed, static_cast<std::uint64_t>(trial));
    ProfileGenerator gen(config);
    TrialResult result;
    switch (axiom) {
      case Axiom::kSelfConsistency:
        SelfConsistency(gen, trial, result);
        break;
      case Axiom::kReinforcement:
        Reinforcement(gen, trial, result);
        break;
      case Axiom::kCancellation:
        Cancellation(gen, trial, result);
        break;
      case Axiom::kFaithfulness:
        Faithfulness(gen, trial, result);
        break;
      case Axiom::kNeutrality:
        Neutrality(gen, trial, result);
        break;
      case Axiom::kAnonymity:
        Anonymity(gen, trial, result);
        break;
      case Axiom::kMonotonicity:
        Monotonicity(gen, trial, result);
        break;
    }
    return result;
  }

 private:
  ScoreVector Scores(const Profile& p) const {
    ScoreVector s = procedure_(p);
    if (s.size() != p.alternatives()) {
      throw Error(ErrorCode::kProtocolError, "procedure '" + procedure_.name + "' returned " +
                                                 std::to_string(s.size()) + " scores for " +
                                                 std::to_string(p.alternatives()) + " alternatives");
    }
    s.tolerance = options_.tolerance;
    return s;
  }

  static void Record(TrialResult& result, int trial, std::string detail, std::vector<Profile> profiles,
                     std::vector<ScoreVector> scores) {
    result.violations.push_back(AxiomViolation{trial, std::move(detail), std::move(profiles), std::move(scores), {}});
  }

  void SelfConsistency(ProfileGenerator& gen, int trial, TrialResult& result) const {
    const int n = gen.DrawAlternatives();
    const int m = gen.DrawIndividuals();
    const Profile a = gen.Next(n, m);
    const Profile b = gen.Next(n, m);
    const ScoreVector sa = Scores(a);
    const ScoreVector sb = Scores(b);
    const std::array<std::pair<const Profile*, const ScoreVector*>, 2> side = {{{&a, &sa}, {&b, &sb}}};
    for (const auto& [pa, score_a] : side) {
      for (const auto& [pb, score_b] : side) {
        result.checks += static_cast<std::int64_t>(n) * n;
        for (ViolationReport& report : CheckSelfConsistency(*pa, *score_a, *pb, *score_b)) {
          std::ostringstream detail;
          detail << "alternative " << report.i + 1 << " " << (report.kind == ViolationKind::kStrict ? "strictly " : "")
                 << "majorizes alternative " << report.j + 1 << " but scores are " << report.scores_a[report.i]
                 << " vs " << report.scores_b[report.j];
          if (report.kind == ViolationKind::kStrict) ++result.strict;
          AxiomViolation v{trial, detail.str(), {report.profile_a, report.profile_b},
                           {report.scores_a, report.scores_b}, std::move(report)};
          result.violations.push_back(std::move(v));
        }
      }
    }
  }

  void Reinforcement(ProfileGenerator& gen, int trial, TrialResult& result) const {
    const int n = gen.DrawAlternatives();
    const Profile a = gen.Next(n, gen.DrawIndividuals());
    const Profile b = gen.Next(n, gen.DrawIndividuals());
    const Profile both = ConcatProfiles(a, b);
    const ScoreVector sa = Scores(a);
    const ScoreVector sb = Scores(b);
    const ScoreVector sab = Scores(both);
    ++result.checks;
    for (int i = 0; i < n; ++i) {
      if (std::abs(sab[i] - (sa[i] + sb[i])) > options_.tolerance) {
        Record(result, trial,
               "combined score of alternative " + std::to_string(i + 1) + " is not the sum of the parts",
               {a, b, both}, {sa, sb, sab});
        return;
      }
    }
  }

  void Cancellation(ProfileGenerator& gen, int trial, TrialResult& result) const {
    const int n = gen.DrawAlternatives();
    const Profile half = gen.Next(n, gen.DrawIndividuals());
    Profile balanced = ConcatProfiles(half, Transposed(half));
    if (gen.rng().Int(0, 1) == 1) balanced = ConcatProfiles(balanced, AllTies(n));
    const ScoreVector s = Scores(balanced);
    ++result.checks;
    const auto [lo, hi] = std::minmax_element(s.values.begin(), s.values.end());
    if (*hi - *lo > options_.tolerance) {
      Record(result, trial, "balanced profile does not tie all alternatives: " + Describe(s), {balanced}, {s});
    }
  }

  void Faithfulness(ProfileGenerator& gen, int trial, TrialResult& result) const {
    const int n = gen.DrawAlternatives();
    const std::vector<int> order = gen.rng().Permutation(n);
    const Profile p = FromLinearOrders({order});
    const ScoreVector s = Scores(p);
    ++result.checks;
    for (int x = 0; x + 1 < n; ++x) {
      if (!s.Greater(order[x], order[x + 1])) {
        Record(result, trial,
               "single order ranks " + std::to_string(order[x] + 1) + " above " + std::to_string(order[x + 1] + 1) +
                   " but scores are " + Describe(s),
               {p}, {s});
        return;
      }
    }
  }

  void Neutrality(ProfileGenerator& gen, int trial, TrialResult& result) const {
    const Profile p = gen.Next();
    const std::vector<int> perm = gen.rng().Permutation(p.alternatives());
    const Profile q = p.PermuteAlternatives(perm);
    const ScoreVector s = Scores(p);
    const ScoreVector t = Scores(q);
    ++result.checks;
    for (int i = 0; i < p.alternatives(); ++i) {
      if (std::abs(t[perm[i]] - s[i]) > options_.tolerance) {
        Record(result, trial, "relabeling alternative " + std::to_string(i + 1) + " changed its score", {p, q},
               {s, t});
        return;
      }
    }
  }

  void Anonymity(ProfileGenerator& gen, int trial, TrialResult& result) const {
    const Profile p = gen.Next();
    const Profile q = p.PermuteIndividuals(gen.rng().Permutation(p.individuals()));
    const ScoreVector s = Scores(p);
    const ScoreVector t = Scores(q);
    ++result.checks;
    for (int i = 0; i < p.alternatives(); ++i) {
      if (std::abs(t[i] - s[i]) > options_.tolerance) {
        Record(result, trial, "reordering individuals changed the score of " + std::to_string(i + 1), {p, q},
               {s, t});
        return;
      }
    }
  }

  void Monotonicity(ProfileGenerator& gen, int trial, TrialResult& result) const {
    const Profile p = gen.Next();
    const int n = p.alternatives();
    std::vector<std::array<int, 3>> raisable;
    for (int q = 0; q < p.individuals(); ++q) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i != j && p.outcome(q, i, j) < 1.0) raisable.push_back({q, i, j});
        }
      }
    }
    if (raisable.empty()) return;
    const auto [q, i, j] = raisable[gen.rng().Int(0, static_cast<int>(raisable.size()) - 1)];
    const double before = p.outcome(q, i, j);
    double after = before + gen.rng().Open01() * (1.0 - before);
    if (after <= before) after = std::nextafter(before, 1.0);
    const Profile raised = p.WithOutcome(q, i, j, std::min(after, 1.0));
    const ScoreVector s = Scores(p);
    const ScoreVector t = Scores(raised);
    ++result.checks;
    std::ostringstream detail;
    if (t[i] < s[i] - options_.tolerance) {
      detail << "raising a_" << i + 1 << j + 1 << " in individual " << q + 1 << " lowered the score of " << i + 1
             << " from " << s[i] << " to " << t[i];
    } else {
      for (int k = 0; k < n; ++k) {
        if (k != i && s.Greater(i, k) && t.Greater(k, i)) {
          detail << "raising a_" << i + 1 << j + 1 << " in individual " << q + 1 << " let " << k + 1
                 << " overtake " << i + 1;
          break;
        }
      }
    }
    if (!detail.str().empty()) Record(result, trial, detail.str(), {p, raised}, {s, t});
  }

  const ProcedureHandle& procedure_;
  const FuzzOptions& options_;
};

}  // namespace

PerformanceMultiset BuildPerformanceMultiset(const Profile& profile, const ScoreVector& scores, int alternative) {
  const int n = profile.alternatives();
  if (scores.size() != n) throw Error(ErrorCode::kDimensionMismatch, "score vector length differs from n");
  if (alternative < 0 || alternative >= n) throw Error(ErrorCode::kInvalidArgument, "alternative out of range");
  PerformanceMultiset out;
  out.pairs.reserve(static_cast<std::size_t>(profile.individuals()) * (n - 1));
  for (int p = 0; p < profile.individuals(); ++p) {
    for (int k = 0; k < n; ++k) {
      if (k != alternative) out.pairs.push_back({profile.outcome(p, alternative, k), scores[k]});
    }
  }
  return out;
}

std::optional<MajorizationWitness> Majorizes(const PerformanceMultiset& u, const PerformanceMultiset& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kCardinalityMismatch, "performance multisets of sizes " + std::to_string(u.size()) +
                                                     " and " + std::to_string(v.size()));
  }
  auto matching = FindPerfectMatching(u.size(), [&](int l, int r) {
    return u.pairs[l].outcome >= v.pairs[r].outcome && u.pairs[l].opponent_score >= v.pairs[r].opponent_score;
  });
  if (!matching) return std::nullopt;
  std::vector<Performance> a = u.pairs;
  std::vector<Performance> b = v.pairs;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return MajorizationWitness{std::move(*matching), a != b};
}

std::vector<ViolationReport> CheckSelfConsistency(const Profile& a, const ScoreVector& scores_a, const Profile& b,
                                                  const ScoreVector& scores_b) {
  if (a.alternatives() != b.alternatives() || a.individuals() != b.individuals()) {
    throw Error(ErrorCode::kDimensionMismatch, "self-consistency compares profiles of equal n and m");
  }
  const double tol = std::max(scores_a.tolerance, scores_b.tolerance);
  const int n = a.alternatives();
  std::vector<PerformanceMultiset> ua;
  std::vector<PerformanceMultiset> ub;
  for (int i = 0; i < n; ++i) {
    ua.push_back(BuildPerformanceMultiset(a, scores_a, i));
    ub.push_back(BuildPerformanceMultiset(b, scores_b, i));
  }
  std::vector<ViolationReport> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto witness = Majorizes(ua[i], ub[j]);
      if (!witness) continue;
      const double si = scores_a[i];
      const double sj = scores_b[j];
      if (witness->strict && !(si > sj + tol)) {
        out.push_back({a, b, i, j, ViolationKind::kStrict, std::move(*witness), scores_a, scores_b});
      } else if (!witness->strict && si < sj - tol) {
        out.push_back({a, b, i, j, ViolationKind::kWeak, std::move(*witness), scores_a, scores_b});
      }
    }
  }
  return out;
}

std::vector<ViolationReport> CheckSelfConsistency(const ProcedureHandle& procedure, const Profile& a,
                                                  const Profile& b) {
  return CheckSelfConsistency(a, procedure(a), b, procedure(b));
}

bool ReplayViolation(const ViolationReport& report, const ProcedureHandle& procedure) {
  ScoreVector sa = procedure(report.profile_a);
  ScoreVector sb = procedure(report.profile_b);
  sa.tolerance = report.scores_a.tolerance;
  sb.tolerance = report.scores_b.tolerance;
  for (const ViolationReport& again : CheckSelfConsistency(report.profile_a, sa, report.profile_b, sb)) {
    if (again.i == report.i && again.j == report.j && again.kind == report.kind) return true;
  }
  return false;
}

std::string_view AxiomName(Axiom axiom) {
  for (const auto& [a, name] : kAxiomNames) {
    if (a == axiom) return name;
  }
  return "unknown";
}

std::optional<Axiom> ParseAxiom(std::string_view name) {
  for (const auto& [a, label] : kAxiomNames) {
    if (label == name) return a;
  }
  return std::nullopt;
}

const std::vector<Axiom>& AllAxioms() {
  static const std::vector<Axiom> kAll = {Axiom::kSelfConsistency, Axiom::kReinforcement, Axiom::kCancellation,
                                          Axiom::kFaithfulness,    Axiom::kNeutrality,    Axiom::kAnonymity,
                                          Axiom::kMonotonicity};
  return kAll;
}

FuzzSummary FuzzAxiom(const ProcedureHandle& procedure, Axiom axiom, const FuzzOptions& options) {
  if (options.trials < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one trial");
  options.generator.Validate();
  if (axiom == Axiom::kFaithfulness && !procedure.defined_on_crisp) {
    throw Error(ErrorCode::kUnsupportedAxiomForProcedure,
                "procedure '" + procedure.name + "' is not defined on single linear orders");
  }

  const TrialRunner runner(procedure, options);
  std::vector<TrialResult> results(options.trials);
  const int workers = std::clamp(options.threads, 1, options.trials);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<int> failed_trial(workers, options.trials);
  auto work = [&](int w) {
    for (int t = w; t < options.trials; t += workers) {
      try {
        results[t] = runner.Run(axiom, t);
      } catch (...) {
        errors[w] = std::current_exception();
        failed_trial[w] = t;
        return;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  // Report the failure of the earliest trial so the outcome does not depend
  // on the thread count.
  int first = -1;
  for (int w = 0; w < workers; ++w) {
    if (errors[w] && (first < 0 || failed_trial[w] < failed_trial[first])) first = w;
  }
  if (first >= 0) std::rethrow_exception(errors[first]);

  FuzzSummary summary;
  summary.axiom = axiom;
  summary.procedure = procedure.name;
  summary.trials = options.trials;
  for (TrialResult& r : results) {
    summary.checks += r.checks;
    summary.strict_violations += r.strict;
    if (r.violations.empty()) continue;
    ++summary.violating_trials;
    for (AxiomViolation& v : r.violations) {
      if (static_cast<int>(summary.violations.size()) >= options.max_reports) break;
      summary.violations.push_back(std::move(v));
    }
  }
  return summary;
}

}  // namespace ranklab
