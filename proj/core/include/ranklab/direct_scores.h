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

#ifndef RANKLAB_DIRECT_SCORES_H_
#define RANKLAB_DIRECT_SCORES_H_

#include <vector>

#include "ranklab/profile.h"

namespace ranklab {

// Closed-form scoring procedures. All of them are pure functions of the
// profile; the returned vectors carry kDefaultTolerance.

// s_i = sum_p sum_{j != i} (a_ij^p - a_ji^p). Sums to zero.
ScoreVector ExtendedBorda(const Profile& profile);

// s_i = sum_p sum_{j != i} a_ij^p.
ScoreVector DownSidedBorda(const Profile& profile);

// s_i = -sum_p sum_{j != i} a_ji^p.
ScoreVector UpSidedBorda(const Profile& profile);

// For rank vectors (see FromWeakOrders): s_i sums, over individuals, the
// number of strata strictly below i. Errors: kMalformedRanks.
ScoreVector FactoredBorda(const std::vector<std::vector<int>>& rankings);

// Approval counts; equal to factored Borda scores of the two-strata orders.
ScoreVector ApprovalScores(int n, const std::vector<std::vector<int>>& ballots);

// s_i = sum_p points[#{j : a_ij^p = 1}]. Requires a linear-order profile
// (kNotLinearOrderProfile) and n point values (kDimensionMismatch).
ScoreVector PointScores(const Profile& profile, const PositionalWeights& points);

// Plurality: one point for the top alternative of each order.
ScoreVector PluralityScores(const Profile& profile);

// s_i = sum_{j != i} lobby(sum_p a_ij^p). Requires m+1 lobby weights
// (kDimensionMismatch).
ScoreVector LobbySizeScores(const Profile& profile, const LobbyWeights& lobby);

// nu * point + (1 - nu) * lobby, with nu in [0, 1] (kInvalidArgument). The
// point part is only evaluated when nu > 0.
ScoreVector ConvexCombinationScores(const Profile& profile, const PositionalWeights& points,
                                    const LobbyWeights& lobby, double nu);

// Extended Borda score of a single relation. Errors: kNotSingleRelation.
ScoreVector CopelandScores(const Profile& profile);

}  // namespace ranklab

#endif  // RANKLAB_DIRECT_SCORES_H_
