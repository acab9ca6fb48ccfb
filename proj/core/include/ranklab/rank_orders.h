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

#ifndef RANKLAB_RANK_ORDERS_H_
#define RANKLAB_RANK_ORDERS_H_

#include <vector>

#include "ranklab/profile.h"

namespace ranklab {

// Descending strata of alternatives; together they partition 0..n-1 and each
// stratum is sorted ascending.
struct Ranking {
  std::vector<std::vector<int>> strata;

  friend bool operator==(const Ranking&, const Ranking&) = default;
};

// Top stratum of a ranking, sorted ascending.
using ChoiceSet = std::vector<int>;

// Scores are sorted descending and neighbours within `scores.tolerance` are
// merged, so a chain of near-ties forms one stratum.
Ranking RankingFromScores(const ScoreVector& scores);
ChoiceSet ChoiceFromScores(const ScoreVector& scores);

// Number of discordant pairs between `order` (best first) and each order of
// the profile, summed over individuals. Errors: kNotLinearOrderProfile,
// kMalformedOrder.
long long InversionDistance(const std::vector<int>& order, const Profile& profile);

// Adjacent swaps needed to put `alternative` on top of every order:
// sum over individuals of its position (0 = top). Errors:
// kNotLinearOrderProfile.
long long DistanceToUnanimity(const Profile& profile, int alternative);

// Alternatives with the smallest DistanceToUnanimity.
// Errors: kNotLinearOrderProfile.
ChoiceSet ClosenessToUnanimityChoice(const Profile& profile);

// Orders of a linear-order profile, best first.
// Errors: kNotLinearOrderProfile.
std::vector<std::vector<int>> LinearOrders(const Profile& profile);

struct KemenyResult {
  // Optimal orders, best first, in lexicographic order.
  std::vector<std::vector<int>> medians;
  // sum_p sum_{i != j} |r_ij - a_ij^p|, counting both (i, j) and (j, i).
  double distance = 0.0;
};

inline constexpr int kDefaultKemenyCap = 8;

// Exhaustive scan of all n! orders. Distances within 1e-9 of the minimum are
// ties. Errors: kTooLarge when n > n_cap.
KemenyResult KemenyMedian(const Profile& profile, int n_cap = kDefaultKemenyCap);

// The objective above for one order.
double KemenyDistance(const std::vector<int>& order, const Profile& profile);

}  // namespace ranklab

#endif  // RANKLAB_RANK_ORDERS_H_
