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

#include "ranklab/profile.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "ranklab/error.h"

namespace ranklab {
namespace {

bool IsPermutation(std::span<const int> perm, int size) {
  if (static_cast<int>(perm.size()) != size) return false;
  std::vector<bool> seen(size, false);
  for (int v : perm) {
    if (v < 0 || v >= size || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::string Coord(std::initializer_list<int> values) {
  std::string out = "(";
  bool first = true;
  for (int v : values) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + ")";
}

}  // namespace

Profile::Profile(int n, int m, std::vector<double> data)
    : n_(n), m_(m), data_(std::move(data)), support_(static_cast<std::size_t>(n) * n, 0.0) {
  for (int p = 0; p < m_; ++p) {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) support_[static_cast<std::size_t>(i) * n_ + j] += outcome(p, i, j);
    }
  }
}

Profile Profile::FromMatrices(int n, int m, const std::vector<Matrix>& matrices) {
  if (n < 2) throw Error(ErrorCode::kDimensionMismatch, "profile needs at least 2 alternatives");
  if (m < 1) throw Error(ErrorCode::kDimensionMismatch, "profile needs at least 1 individual");
  if (static_cast<int>(matrices.size()) != m) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(m) + " matrices, got " + std::to_string(matrices.size()));
  }
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(m) * n * n);
  for (int p = 0; p < m; ++p) {
    const Matrix& a = matrices[p];
    if (static_cast<int>(a.size()) != n) {
      throw Error(ErrorCode::kDimensionMismatch, "matrix " + std::to_string(p + 1) + " is not n x n",
                  {p + 1});
    }
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(a[i].size()) != n) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "matrix " + std::to_string(p + 1) + " row " + std::to_string(i + 1) + " has wrong length",
                    {p + 1, i + 1});
      }
      for (int j = 0; j < n; ++j) {
        const double v = a[i][j];
        if (!(v >= 0.0 && v <= 1.0)) {
          throw Error(ErrorCode::kOutOfRange, "OutOfRange" + Coord({p + 1, i + 1, j + 1}),
                      {p + 1, i + 1, j + 1});
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      if (a[i][i] != 0.0) {
        throw Error(ErrorCode::kNonzeroDiagonal, "NonzeroDiagonal" + Coord({p + 1, i + 1}), {p + 1, i + 1});
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (a[i][j] + a[j][i] != 1.0) {
          throw Error(ErrorCode::kComplementarityViolation,
                      "ComplementarityViolation" + Coord({p + 1, i + 1, j + 1}), {p + 1, i + 1, j + 1});
        }
      }
    }
    for (int i = 0; i < n; ++i) data.insert(data.end(), a[i].begin(), a[i].end());
  }
  return Profile(n, m, std::move(data));
}

double Profile::wins(int i) const {
  double total = 0.0;
  for (int j = 0; j < n_; ++j) total += support(i, j);
  return total;
}

double Profile::losses(int i) const {
  double total = 0.0;
  for (int j = 0; j < n_; ++j) total += support(j, i);
  return total;
}

Profile::Matrix Profile::matrix(int p) const {
  Matrix a(n_, std::vector<double>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) a[i][j] = outcome(p, i, j);
  }
  return a;
}

std::vector<Profile::Matrix> Profile::matrices() const {
  std::vector<Matrix> out;
  out.reserve(m_);
  for (int p = 0; p < m_; ++p) out.push_back(matrix(p));
  return out;
}

Profile Profile::PermuteAlternatives(std::span<const int> perm) const {
  if (!IsPermutation(perm, n_)) {
    throw Error(ErrorCode::kInvalidArgument, "alternative relabeling is not a permutation");
  }
  std::vector<double> data(data_.size());
  for (int p = 0; p < m_; ++p) {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        data[(static_cast<std::size_t>(p) * n_ + perm[i]) * n_ + perm[j]] = outcome(p, i, j);
      }
    }
  }
  return Profile(n_, m_, std::move(data));
}

Profile Profile::PermuteIndividuals(std::span<const int> perm) const {
  if (!IsPermutation(perm, m_)) {
    throw Error(ErrorCode::kInvalidArgument, "individual reordering is not a permutation");
  }
  const std::size_t block = static_cast<std::size_t>(n_) * n_;
  std::vector<double> data;
  data.reserve(data_.size());
  for (int p = 0; p < m_; ++p) {
    auto first = data_.begin() + static_cast<std::ptrdiff_t>(perm[p] * block);
    data.insert(data.end(), first, first + static_cast<std::ptrdiff_t>(block));
  }
  return Profile(n_, m_, std::move(data));
}

Profile Profile::WithOutcome(int p, int i, int j, double value) const {
  if (p < 0 || p >= m_ || i < 0 || i >= n_ || j < 0 || j >= n_ || i == j) {
    throw Error(ErrorCode::kInvalidArgument, "outcome coordinate out of range");
  }
  auto mats = matrices();
  mats[p][i][j] = value;
  mats[p][j][i] = 1.0 - value;
  return FromMatrices(n_, m_, mats);
}

bool Profile::IsLinearOrderProfile() const {
  for (int p = 0; p < m_; ++p) {
    std::vector<bool> seen(n_, false);
    for (int i = 0; i < n_; ++i) {
      int defeated = 0;
      for (int j = 0; j < n_; ++j) {
        if (i == j) continue;
        const double v = outcome(p, i, j);
        if (v == 1.0) {
          ++defeated;
        } else if (v != 0.0) {
          return false;
        }
      }
      if (seen[defeated]) return false;
      seen[defeated] = true;
    }
  }
  return true;
}

Profile FromLinearOrders(const std::vector<std::vector<int>>& orders) {
  if (orders.empty()) throw Error(ErrorCode::kMalformedOrder, "no orders given");
  const int n = static_cast<int>(orders.front().size());
  if (n < 2) throw Error(ErrorCode::kMalformedOrder, "orders need at least 2 alternatives");
  std::vector<Profile::Matrix> mats;
  for (std::size_t p = 0; p < orders.size(); ++p) {
    const auto& order = orders[p];
    if (!IsPermutation(order, n)) {
      throw Error(ErrorCode::kMalformedOrder, "order " + std::to_string(p + 1) + " is not a permutation",
                  {static_cast<int>(p) + 1});
    }
    Profile::Matrix a(n, std::vector<double>(n, 0.0));
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) a[order[x]][order[y]] = 1.0;
    }
    mats.push_back(std::move(a));
  }
  return Profile::FromMatrices(n, static_cast<int>(orders.size()), mats);
}

Profile FromWeakOrders(const std::vector<std::vector<int>>& rankings) {
  if (rankings.empty()) throw Error(ErrorCode::kMalformedRanks, "no rank vectors given");
  const int n = static_cast<int>(rankings.front().size());
  if (n < 2) throw Error(ErrorCode::kMalformedRanks, "rank vectors need at least 2 alternatives");
  std::vector<Profile::Matrix> mats;
  for (std::size_t p = 0; p < rankings.size(); ++p) {
    const auto& ranks = rankings[p];
    if (static_cast<int>(ranks.size()) != n) {
      throw Error(ErrorCode::kMalformedRanks, "rank vector " + std::to_string(p + 1) + " has wrong length",
                  {static_cast<int>(p) + 1});
    }
    Profile::Matrix a(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        a[i][j] = ranks[i] < ranks[j] ? 1.0 : ranks[i] == ranks[j] ? 0.5 : 0.0;
      }
    }
    mats.push_back(std::move(a));
  }
  return Profile::FromMatrices(n, static_cast<int>(rankings.size()), mats);
}

Profile FromApprovalBallots(int n, const std::vector<std::vector<int>>& ballots) {
  if (n < 2) throw Error(ErrorCode::kDimensionMismatch, "profile needs at least 2 alternatives");
  std::vector<std::vector<int>> rankings;
  for (std::size_t p = 0; p < ballots.size(); ++p) {
    std::vector<int> ranks(n, 2);
    for (int v : ballots[p]) {
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::kElementOutOfRange,
                    "ballot " + std::to_string(p + 1) + " names alternative " + std::to_string(v + 1),
                    {static_cast<int>(p) + 1, v + 1});
      }
      ranks[v] = 1;
    }
    rankings.push_back(std::move(ranks));
  }
  return FromWeakOrders(rankings);
}

std::vector<std::vector<int>> WeakOrderRanks(const Profile& profile) {
  const int n = profile.alternatives();
  std::vector<std::vector<int>> out;
  for (int p = 0; p < profile.individuals(); ++p) {
    std::vector<double> key(n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const double v = profile.outcome(p, i, j);
        if (v != 0.0 && v != 0.5 && v != 1.0) {
          throw Error(ErrorCode::kNotWeakOrderProfile, "individual " + std::to_string(p + 1) +
                                                           " has a valued outcome");
        }
        key[i] += v;
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const double v = profile.outcome(p, i, j);
        const double expected = key[i] > key[j] ? 1.0 : key[i] == key[j] ? 0.5 : 0.0;
        if (v != expected) {
          throw Error(ErrorCode::kNotWeakOrderProfile,
                      "individual " + std::to_string(p + 1) + " relation is not transitive");
        }
      }
    }
    std::set<double, std::greater<>> levels(key.begin(), key.end());
    std::vector<int> ranks(n);
    for (int i = 0; i < n; ++i) {
      ranks[i] = 1 + static_cast<int>(std::distance(levels.begin(), levels.find(key[i])));
    }
    out.push_back(std::move(ranks));
  }
  return out;
}

Profile ConcatProfiles(const Profile& a, const Profile& b) {
  if (a.alternatives() != b.alternatives()) {
    throw Error(ErrorCode::kDimensionMismatch, "cannot combine profiles over " + std::to_string(a.alternatives()) +
                                                   " and " + std::to_string(b.alternatives()) + " alternatives");
  }
  auto mats = a.matrices();
  auto more = b.matrices();
  mats.insert(mats.end(), more.begin(), more.end());
  return Profile::FromMatrices(a.alternatives(), a.individuals() + b.individuals(), mats);
}

PositionalWeights::PositionalWeights(std::vector<double> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::kInvalidArgument, "positional weights are empty");
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (!(points_[k] >= 0.0) || !std::isfinite(points_[k])) {
      throw Error(ErrorCode::kInvalidArgument, "positional weights must be finite and non-negative");
    }
    if (k > 0 && points_[k] < points_[k - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "positional weights must be non-decreasing");
    }
  }
}

LobbyWeights::LobbyWeights(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 2) throw Error(ErrorCode::kInvalidArgument, "lobby weights need m+1 >= 2 entries");
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    if (!(weights_[k] >= 0.0) || !std::isfinite(weights_[k])) {
      throw Error(ErrorCode::kInvalidArgument, "lobby weights must be finite and non-negative");
    }
    if (k > 0 && weights_[k] < weights_[k - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "lobby weights must be non-decreasing");
    }
  }
}

double LobbyWeights::Interpolate(double support) const {
  const double top = static_cast<double>(weights_.size() - 1);
  const double x = std::clamp(support, 0.0, top);
  const double base = std::floor(x);
  const auto k = static_cast<std::size_t>(base);
  if (k + 1 >= weights_.size()) return weights_.back();
  const double frac = x - base;
  if (frac == 0.0) return weights_[k];
  return weights_[k] + frac * (weights_[k + 1] - weights_[k]);
}

}  // namespace ranklab
