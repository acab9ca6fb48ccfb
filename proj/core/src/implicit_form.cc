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

#include "ranklab/implicit_form.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ranklab/error.h"
#include "ranklab/generator.h"
#include "ranklab/matching.h"
#include "ranklab/paretian.h"

namespace ranklab {
namespace {

constexpr std::array<double, 3> kProbeSteps = {1e-6, 1e-2, 1.0};

double Component(const ComparisonTriple& t, int k) {
  return k == 0 ? t.outcome : k == 1 ? t.opponent_score : t.neg_own_score;
}

double& Component(ComparisonTriple& t, int k) {
  return k == 0 ? t.outcome : k == 1 ? t.opponent_score : t.neg_own_score;
}

bool LessEqual(const ComparisonTriple& a, const ComparisonTriple& b) {
  return a.outcome <= b.outcome && a.opponent_score <= b.opponent_score && a.neg_own_score <= b.neg_own_score;
}

// adjacency[r] has bit q set when lower[r] <= upper[q].
void DominanceMasks(const TripleMultiset& lower, const TripleMultiset& upper, std::uint64_t* adjacency) {
  const std::size_t size = lower.size();
  for (std::size_t r = 0; r < size; ++r) {
    std::uint64_t mask = 0;
    for (std::size_t q = 0; q < size; ++q) {
      if (LessEqual(lower[r], upper[q])) mask |= std::uint64_t{1} << q;
    }
    adjacency[r] = mask;
  }
}

TripleMultiset ContractTriples(const TripleMultiset& triples) {
  TripleMultiset out = triples;
  for (ComparisonTriple& t : out) {
    for (int k = 0; k < 3; ++k) Component(t, k) = ContractCoordinate(Component(t, k));
  }
  Canonicalize(out);
  return out;
}

}  // namespace

TripleMultiset ComparisonTriples(const Profile& profile, const ScoreVector& scores, int alternative) {
  const int n = profile.alternatives();
  if (scores.size() != n) throw Error(ErrorCode::kDimensionMismatch, "score vector length differs from n");
  TripleMultiset out;
  for (int p = 0; p < profile.individuals(); ++p) {
    for (int j = 0; j < n; ++j) {
      if (j != alternative) out.push_back({profile.outcome(p, alternative, j), scores[j], -scores[alternative]});
    }
  }
  Canonicalize(out);
  return out;
}

std::vector<double> FlattenTriples(const TripleMultiset& triples) {
  std::vector<double> flat;
  flat.reserve(triples.size() * 3);
  for (const ComparisonTriple& t : triples) {
    flat.push_back(t.outcome);
    flat.push_back(t.opponent_score);
    flat.push_back(t.neg_own_score);
  }
  return flat;
}

TripleMultiset GroupTriples(std::span<const double> flat) {
  if (flat.size() % 3 != 0) {
    throw Error(ErrorCode::kDimensionMismatch, "triple vector length " + std::to_string(flat.size()) +
                                                   " is not a multiple of 3");
  }
  TripleMultiset out;
  for (std::size_t c = 0; c < flat.size(); c += 3) out.push_back({flat[c], flat[c + 1], flat[c + 2]});
  return out;
}

void Canonicalize(TripleMultiset& triples) { std::sort(triples.begin(), triples.end()); }

bool TriplesDominated(const TripleMultiset& lower, const TripleMultiset& upper) {
  if (lower.size() != upper.size()) return false;
  if (lower.size() <= 64) {
    std::array<std::uint64_t, 64> adjacency{};
    DominanceMasks(lower, upper, adjacency.data());
    return HasPerfectMatching(std::span<const std::uint64_t>(adjacency.data(), lower.size()));
  }
  return FindPerfectMatching(static_cast<int>(lower.size()),
                             [&](int r, int q) { return LessEqual(lower[r], upper[q]); })
      .has_value();
}

std::vector<TripleSample> CollectComparisonTriples(const ProcedureHandle& procedure,
                                                   std::span<const Profile> profiles) {
  std::vector<TripleSample> out;
  for (std::size_t p = 0; p < profiles.size(); ++p) {
    const Profile& profile = profiles[p];
    if (profile.alternatives() != profiles.front().alternatives() ||
        profile.individuals() != profiles.front().individuals()) {
      throw Error(ErrorCode::kDimensionMismatch, "triple vectors need profiles of equal n and m");
    }
    const ScoreVector scores = procedure(profile);
    for (int i = 0; i < profile.alternatives(); ++i) {
      out.push_back({ComparisonTriples(profile, scores, i), static_cast<int>(p), i});
    }
  }
  return out;
}

TriplesParetianReport CheckTriplesParetian(const ProcedureHandle& procedure, std::span<const Profile> profiles) {
  std::vector<TripleSample> samples = CollectComparisonTriples(procedure, profiles);
  TriplesParetianReport report;
  report.collected = static_cast<int>(samples.size());
  std::stable_sort(samples.begin(), samples.end(),
                   [](const TripleSample& a, const TripleSample& b) { return a.triples < b.triples; });
  samples.erase(std::unique(samples.begin(), samples.end(),
                            [](const TripleSample& a, const TripleSample& b) { return a.triples == b.triples; }),
                samples.end());
  report.distinct = static_cast<int>(samples.size());
  for (const TripleSample& a : samples) {
    for (const TripleSample& b : samples) {
      if (&a != &b && TriplesDominated(a.triples, b.triples)) {
        report.paretian = false;
        report.offending = std::make_pair(a, b);
        return report;
      }
    }
  }
  return report;
}

MultisetExtension MultisetExtension::Build(std::vector<TripleMultiset> points, std::vector<double> values) {
  if (points.size() != values.size()) throw Error(ErrorCode::kDimensionMismatch, "one value per point required");
  if (points.empty()) throw Error(ErrorCode::kInvalidArgument, "extension needs at least one point");
  MultisetExtension ext;
  ext.triples_ = static_cast<int>(points.front().size());
  if (ext.triples_ < 1 || ext.triples_ > 64) {
    throw Error(ErrorCode::kTooLarge, "multisets must hold between 1 and 64 triples");
  }
  for (const TripleMultiset& z : points) {
    if (static_cast<int>(z.size()) != ext.triples_) {
      throw Error(ErrorCode::kDimensionMismatch, "multisets must have equal size");
    }
    for (const ComparisonTriple& t : z) {
      for (int k = 0; k < 3; ++k) {
        if (!std::isfinite(Component(t, k))) throw Error(ErrorCode::kInvalidArgument, "non-finite coordinate");
      }
    }
    ext.cube_.push_back(ContractTriples(z));
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "non-finite value");
  }
  const int size = static_cast<int>(ext.cube_.size());
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      if (a == b) continue;
      if (ext.cube_[a] == ext.cube_[b]) {
        throw Error(ErrorCode::kInvalidArgument, "duplicate multisets " + std::to_string(a + 1) + " and " +
                                                     std::to_string(b + 1) + "; merge them first");
      }
      if (TriplesDominated(ext.cube_[a], ext.cube_[b])) {
        throw Error(ErrorCode::kNotParetian,
                    "multiset " + std::to_string(a + 1) + " lies below multiset " + std::to_string(b + 1),
                    {a + 1, b + 1});
      }
    }
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  ext.f_min_ = *lo;
  ext.f_max_ = *hi;
  ext.values_ = std::move(values);
  return ext;
}

double MultisetExtension::DownDistance(const TripleMultiset& y, int slot, int component, bool in_down) const {
  if (in_down) return 0.0;
  double best = Component(y[slot], component) + 1.0;
  std::array<std::uint64_t, 64> adjacency{};
  const std::span<const std::uint64_t> adj(adjacency.data(), y.size());
  for (const TripleMultiset& z : cube_) {
    bool masks_ready = false;
    for (int q = 0; q < triples_; ++q) {
      bool above_elsewhere = true;
      for (int k = 0; k < 3; ++k) {
        if (k != component && Component(z[q], k) < Component(y[slot], k)) above_elsewhere = false;
      }
      if (!above_elsewhere) continue;
      const double cost = std::max(0.0, Component(y[slot], component) - Component(z[q], component));
      if (cost >= best) continue;
      if (!masks_ready) {
        DominanceMasks(y, z, adjacency.data());
        masks_ready = true;
      }
      const std::uint64_t saved = adjacency[slot];
      adjacency[slot] = std::uint64_t{1} << q;
      if (HasPerfectMatching(adj)) best = cost;
      adjacency[slot] = saved;
    }
  }
  return best;
}

double MultisetExtension::UpDistance(const TripleMultiset& y, int slot, int component, bool in_up) const {
  if (in_up) return 0.0;
  double best = 1.0 - Component(y[slot], component);
  std::array<std::uint64_t, 64> adjacency{};
  const std::span<const std::uint64_t> adj(adjacency.data(), y.size());
  for (const TripleMultiset& z : cube_) {
    bool masks_ready = false;
    for (int q = 0; q < triples_; ++q) {
      bool below_elsewhere = true;
      for (int k = 0; k < 3; ++k) {
        if (k != component && Component(z[q], k) > Component(y[slot], k)) below_elsewhere = false;
      }
      if (!below_elsewhere) continue;
      const double cost = std::max(0.0, Component(z[q], component) - Component(y[slot], component));
      if (cost >= best) continue;
      if (!masks_ready) {
        // Slots of y must sit above the triples of z: lower = z, upper = y,
        // transposed so that rows are the slots of y.
        for (int r = 0; r < triples_; ++r) {
          std::uint64_t mask = 0;
          for (int s = 0; s < triples_; ++s) {
            if (LessEqual(z[s], y[r])) mask |= std::uint64_t{1} << s;
          }
          adjacency[r] = mask;
        }
        masks_ready = true;
      }
      const std::uint64_t saved = adjacency[slot];
      adjacency[slot] = std::uint64_t{1} << q;
      if (HasPerfectMatching(adj)) best = cost;
      adjacency[slot] = saved;
    }
  }
  return best;
}

double MultisetExtension::Evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(dimension()) + " coordinates, got " + std::to_string(x.size()));
  }
  for (double v : x) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "non-finite coordinate");
  }
  const TripleMultiset y = ContractTriples(GroupTriples(x));

  bool in_down = false;
  bool in_up = false;
  std::optional<double> on_set;
  for (std::size_t b = 0; b < cube_.size(); ++b) {
    const bool below = TriplesDominated(y, cube_[b]);
    const bool above = TriplesDominated(cube_[b], y);
    in_down = in_down || below;
    in_up = in_up || above;
    if (below && above) on_set = values_[b];
  }
  double region_value = 0.5 * (f_min_ + f_max_);
  if (in_down && in_up) {
    region_value = on_set.value_or(region_value);
  } else if (in_down) {
    region_value = f_min_;
  } else if (in_up) {
    region_value = f_max_;
  }

  double down = 0.0;
  double up = 0.0;
  for (int slot = 0; slot < triples_; ++slot) {
    for (int k = 0; k < 3; ++k) {
      down += DownDistance(y, slot, k, in_down);
      up += UpDistance(y, slot, k, in_up);
    }
  }
  return (down - up) + region_value;
}

ImplicitFormWitnessReport RunImplicitFormWitness(const ProcedureHandle& procedure,
                                                 std::span<const Profile> profiles, const WitnessOptions& options) {
  std::vector<TripleSample> samples = CollectComparisonTriples(procedure, profiles);
  std::vector<TripleMultiset> distinct;
  for (const TripleSample& s : samples) distinct.push_back(s.triples);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const std::vector<double> zeros(distinct.size(), 0.0);
  const MultisetExtension g = MultisetExtension::Build(distinct, zeros);

  ImplicitFormWitnessReport report;
  report.points = g.size();
  for (const TripleSample& s : samples) {
    report.max_abs_on_data = std::max(report.max_abs_on_data, std::abs(g.Evaluate(FlattenTriples(s.triples))));
  }

  Rng rng(options.seed);
  const int dim = g.dimension();
  for (int probe = 0; probe < options.probes; ++probe) {
    const TripleSample& base = samples[rng.Int(0, static_cast<int>(samples.size()) - 1)];
    const std::vector<double> data = FlattenTriples(base.triples);
    std::vector<double> x = data;
    if (rng.Int(0, 1) == 1) {
      for (double& v : x) v += rng.Uniform(-0.25, 0.25);
    }
    const int axis = rng.Int(0, dim - 1);
    const double step = kProbeSteps[rng.Int(0, static_cast<int>(kProbeSteps.size()) - 1)];
    std::vector<double> moved = x;
    moved[axis] += step;
    const double gx = g.Evaluate(x);
    if (!(g.Evaluate(moved) > gx)) ++report.monotone_failures;

    TripleMultiset shuffled = GroupTriples(x);
    const std::vector<int> order = rng.Permutation(static_cast<int>(shuffled.size()));
    TripleMultiset reordered;
    for (int r : order) reordered.push_back(shuffled[r]);
    if (g.Evaluate(FlattenTriples(reordered)) != gx) ++report.permutation_failures;

    std::vector<double> raised = data;
    raised[3 * rng.Int(0, dim / 3 - 1)] += step;
    if (!(g.Evaluate(raised) > 0.0)) ++report.raised_outcome_failures;
    ++report.probes;
  }
  return report;
}

}  // namespace ranklab
