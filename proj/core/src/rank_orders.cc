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

#include "ranklab/rank_orders.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ranklab/error.h"

namespace ranklab {
namespace {

constexpr double kKemenyTieTolerance = 1e-9;

void RequireLinearOrders(const Profile& profile) {
  if (!profile.IsLinearOrderProfile()) {
    throw Error(ErrorCode::kNotLinearOrderProfile, "profile is not made of linear orders");
  }
}

void CheckOrder(const std::vector<int>& order, int n) {
  std::vector<bool> seen(n, false);
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::kMalformedOrder, "order has " + std::to_string(order.size()) + " entries, expected " +
                                                std::to_string(n));
  }
  for (int a : order) {
    if (a < 0 || a >= n || seen[a]) throw Error(ErrorCode::kMalformedOrder, "order is not a permutation");
    seen[a] = true;
  }
}

// positions[p][a]: place of alternative a in order p, 0 = top.
std::vector<std::vector<int>> Positions(const Profile& profile) {
  const int n = profile.alternatives();
  std::vector<std::vector<int>> positions(profile.individuals(), std::vector<int>(n, 0));
  for (int p = 0; p < profile.individuals(); ++p) {
    for (int i = 0; i < n; ++i) {
      int beaten_by = 0;
      for (int j = 0; j < n; ++j) {
        if (j != i && profile.outcome(p, j, i) == 1.0) ++beaten_by;
      }
      positions[p][i] = beaten_by;
    }
  }
  return positions;
}

}  // namespace

Ranking RankingFromScores(const ScoreVector& scores) {
  std::vector<int> idx(scores.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return scores[a] > scores[b]; });
  Ranking ranking;
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (r == 0 || scores[idx[r - 1]] - scores[idx[r]] > scores.tolerance) ranking.strata.emplace_back();
    ranking.strata.back().push_back(idx[r]);
  }
  for (auto& stratum : ranking.strata) std::sort(stratum.begin(), stratum.end());
  return ranking;
}

ChoiceSet ChoiceFromScores(const ScoreVector& scores) {
  Ranking ranking = RankingFromScores(scores);
  return ranking.strata.empty() ? ChoiceSet{} : ranking.strata.front();
}

std::vector<std::vector<int>> LinearOrders(const Profile& profile) {
  RequireLinearOrders(profile);
  const auto positions = Positions(profile);
  std::vector<std::vector<int>> orders;
  for (const auto& pos : positions) {
    std::vector<int> order(pos.size());
    for (std::size_t a = 0; a < pos.size(); ++a) order[pos[a]] = static_cast<int>(a);
    orders.push_back(std::move(order));
  }
  return orders;
}

long long InversionDistance(const std::vector<int>& order, const Profile& profile) {
  RequireLinearOrders(profile);
  const int n = profile.alternatives();
  CheckOrder(order, n);
  long long total = 0;
  for (int p = 0; p < profile.individuals(); ++p) {
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        // order puts order[x] above order[y]; discordant when p disagrees.
        if (profile.outcome(p, order[x], order[y]) == 0.0) ++total;
      }
    }
  }
  return total;
}

long long DistanceToUnanimity(const Profile& profile, int alternative) {
  RequireLinearOrders(profile);
  if (alternative < 0 || alternative >= profile.alternatives()) {
    throw Error(ErrorCode::kElementOutOfRange, "alternative " + std::to_string(alternative + 1) + " out of range");
  }
  long long total = 0;
  for (const auto& pos : Positions(profile)) total += pos[alternative];
  return total;
}

ChoiceSet ClosenessToUnanimityChoice(const Profile& profile) {
  RequireLinearOrders(profile);
  const auto positions = Positions(profile);
  std::vector<long long> distance(profile.alternatives(), 0);
  for (const auto& pos : positions) {
    for (std::size_t a = 0; a < pos.size(); ++a) distance[a] += pos[a];
  }
  const long long best = *std::min_element(distance.begin(), distance.end());
  ChoiceSet choice;
  for (std::size_t a = 0; a < distance.size(); ++a) {
    if (distance[a] == best) choice.push_back(static_cast<int>(a));
  }
  return choice;
}

double KemenyDistance(const std::vector<int>& order, const Profile& profile) {
  const int n = profile.alternatives();
  const double m = profile.individuals();
  CheckOrder(order, n);
  // With r_ij = 1 and r_ji = 0 the pair contributes (m - S_ij) + S_ji.
  double total = 0.0;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      total += (m - profile.support(order[x], order[y])) + profile.support(order[y], order[x]);
    }
  }
  return total;
}

KemenyResult KemenyMedian(const Profile& profile, int n_cap) {
  const int n = profile.alternatives();
  if (n > n_cap) {
    throw Error(ErrorCode::kTooLarge,
                "TooLarge(" + std::to_string(n) + ", " + std::to_string(n_cap) + "): exhaustive Kemeny limit",
                {n, n_cap});
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  KemenyResult result;
  result.distance = INFINITY;
  do {
    const double d = KemenyDistance(order, profile);
    if (d < result.distance - kKemenyTieTolerance) {
      result.distance = d;
      result.medians.clear();
    }
    if (std::abs(d - result.distance) <= kKemenyTieTolerance) result.medians.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return result;
}

}  // namespace ranklab
