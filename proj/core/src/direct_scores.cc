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

#include "ranklab/direct_scores.h"

#include <set>
#include <string>

#include "ranklab/error.h"

namespace ranklab {

ScoreVector ExtendedBorda(const Profile& profile) {
  const int n = profile.alternatives();
  std::vector<double> s(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i) s[i] += profile.support(i, j) - profile.support(j, i);
    }
  }
  return ScoreVector(std::move(s));
}

ScoreVector DownSidedBorda(const Profile& profile) {
  const int n = profile.alternatives();
  std::vector<double> s(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i) s[i] += profile.support(i, j);
    }
  }
  return ScoreVector(std::move(s));
}

ScoreVector UpSidedBorda(const Profile& profile) {
  const int n = profile.alternatives();
  std::vector<double> s(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i) s[i] -= profile.support(j, i);
    }
  }
  return ScoreVector(std::move(s));
}

ScoreVector FactoredBorda(const std::vector<std::vector<int>>& rankings) {
  if (rankings.empty()) throw Error(ErrorCode::kMalformedRanks, "no rank vectors given");
  const std::size_t n = rankings.front().size();
  if (n < 2) throw Error(ErrorCode::kMalformedRanks, "rank vectors need at least 2 alternatives");
  std::vector<double> s(n, 0.0);
  for (std::size_t p = 0; p < rankings.size(); ++p) {
    const auto& ranks = rankings[p];
    if (ranks.size() != n) {
      throw Error(ErrorCode::kMalformedRanks, "rank vector " + std::to_string(p + 1) + " has wrong length",
                  {static_cast<int>(p) + 1});
    }
    // Strata below i = distinct rank values worse than i's rank.
    const std::set<int> levels(ranks.begin(), ranks.end());
    for (std::size_t i = 0; i < n; ++i) {
      s[i] += static_cast<double>(std::distance(levels.upper_bound(ranks[i]), levels.end()));
    }
  }
  return ScoreVector(std::move(s));
}

ScoreVector ApprovalScores(int n, const std::vector<std::vector<int>>& ballots) {
  std::vector<double> s(n, 0.0);
  for (std::size_t p = 0; p < ballots.size(); ++p) {
    std::set<int> approved;
    for (int v : ballots[p]) {
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::kElementOutOfRange,
                    "ballot " + std::to_string(p + 1) + " names alternative " + std::to_string(v + 1),
                    {static_cast<int>(p) + 1, v + 1});
      }
      approved.insert(v);
    }
    for (int v : approved) s[v] += 1.0;
  }
  return ScoreVector(std::move(s));
}

ScoreVector PointScores(const Profile& profile, const PositionalWeights& points) {
  const int n = profile.alternatives();
  if (!profile.IsLinearOrderProfile()) {
    throw Error(ErrorCode::kNotLinearOrderProfile, "point scores need a profile of linear orders");
  }
  if (points.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(n) + " positional weights, got " + std::to_string(points.size()));
  }
  std::vector<double> s(n, 0.0);
  for (int p = 0; p < profile.individuals(); ++p) {
    for (int i = 0; i < n; ++i) {
      int defeated = 0;
      for (int j = 0; j < n; ++j) {
        if (j != i && profile.outcome(p, i, j) == 1.0) ++defeated;
      }
      s[i] += points[defeated];
    }
  }
  return ScoreVector(std::move(s));
}

ScoreVector PluralityScores(const Profile& profile) {
  std::vector<double> top(profile.alternatives(), 0.0);
  top.back() = 1.0;
  return PointScores(profile, PositionalWeights(std::move(top)));
}

ScoreVector LobbySizeScores(const Profile& profile, const LobbyWeights& lobby) {
  const int n = profile.alternatives();
  if (lobby.size() != profile.individuals() + 1) {
    throw Error(ErrorCode::kDimensionMismatch, "expected " + std::to_string(profile.individuals() + 1) +
                                                   " lobby weights, got " + std::to_string(lobby.size()));
  }
  std::vector<double> s(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i) s[i] += lobby.Interpolate(profile.support(i, j));
    }
  }
  return ScoreVector(std::move(s));
}

ScoreVector ConvexCombinationScores(const Profile& profile, const PositionalWeights& points,
                                    const LobbyWeights& lobby, double nu) {
  if (!(nu >= 0.0 && nu <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "mixing weight must lie in [0, 1]");
  }
  ScoreVector lobby_scores = LobbySizeScores(profile, lobby);
  if (nu == 0.0) return lobby_scores;
  const ScoreVector point_scores = PointScores(profile, points);
  if (nu == 1.0) return point_scores;
  for (int i = 0; i < profile.alternatives(); ++i) {
    lobby_scores.values[i] = nu * point_scores[i] + (1.0 - nu) * lobby_scores[i];
  }
  return lobby_scores;
}

ScoreVector CopelandScores(const Profile& profile) {
  if (profile.individuals() != 1) {
    throw Error(ErrorCode::kNotSingleRelation, "Copeland scores are defined on a single relation");
  }
  return ExtendedBorda(profile);
}

}  // namespace ranklab
