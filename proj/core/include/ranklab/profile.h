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

#ifndef RANKLAB_PROFILE_H_
#define RANKLAB_PROFILE_H_

#include <cstddef>
#include <span>
#include <vector>

namespace ranklab {

// Alternatives and individuals are 0-based throughout the library. The CLI
// and the JSON order/choice formats use 1-based labels.

inline constexpr double kDefaultTolerance = 1e-9;

// One square paired-comparison matrix per individual. Entry outcome(p, i, j)
// is the share of the (i, j) comparison won by i in individual p's relation:
// 1 is strict preference for i, 1/2 is indifference, values in between are
// valued (fuzzy) preference.
//
// Invariants, enforced on construction and therefore on every instance:
//   * n >= 2, m >= 1, every entry in [0, 1];
//   * outcome(p, i, i) == 0;
//   * outcome(p, i, j) + outcome(p, j, i) == 1 exactly for i != j.
class Profile {
 public:
  using Matrix = std::vector<std::vector<double>>;

  // Validates and builds. `matrices.size()` must equal `m` and each matrix
  // must be n x n. Errors: kDimensionMismatch, kOutOfRange, kNonzeroDiagonal,
  // kComplementarityViolation (all with 1-based coordinates).
  static Profile FromMatrices(int n, int m, const std::vector<Matrix>& matrices);

  int alternatives() const { return n_; }
  int individuals() const { return m_; }

  double outcome(int p, int i, int j) const {
    return data_[(static_cast<std::size_t>(p) * n_ + i) * n_ + j];
  }

  // Sum over individuals of outcome(p, i, j).
  double support(int i, int j) const {
    return support_[static_cast<std::size_t>(i) * n_ + j];
  }

  // Total outcome of i over all opponents and individuals.
  double wins(int i) const;
  // Total outcome of all opponents against i.
  double losses(int i) const;

  Matrix matrix(int p) const;
  std::vector<Matrix> matrices() const;

  // Relabels alternatives: alternative i of this profile becomes
  // alternative perm[i] of the result.
  Profile PermuteAlternatives(std::span<const int> perm) const;
  // Individual p of the result is individual perm[p] of this profile.
  Profile PermuteIndividuals(std::span<const int> perm) const;
  // Replaces outcome(p, i, j) by `value` and its complement by 1 - value.
  Profile WithOutcome(int p, int i, int j, double value) const;

  // True when every matrix is 0/1 valued and transitive, i.e. derived from a
  // linear order.
  bool IsLinearOrderProfile() const;

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.data_ == b.data_;
  }

 private:
  Profile(int n, int m, std::vector<double> data);

  int n_ = 0;
  int m_ = 0;
  std::vector<double> data_;
  std::vector<double> support_;
};

// Orders list alternatives best first. Errors: kMalformedOrder.
Profile FromLinearOrders(const std::vector<std::vector<int>>& orders);

// Rank vectors: smaller rank is better, equal ranks are ties. All vectors
// must have the same length n >= 2. Errors: kMalformedRanks.
Profile FromWeakOrders(const std::vector<std::vector<int>>& rankings);

// Each ballot is the set of approved alternatives; approved alternatives form
// the top stratum of a two-strata weak order. Errors: kElementOutOfRange.
Profile FromApprovalBallots(int n, const std::vector<std::vector<int>>& ballots);

// Rank vectors that rebuild the weak order of every individual; smallest
// rank 1, dense. Errors: kNotWeakOrderProfile.
std::vector<std::vector<int>> WeakOrderRanks(const Profile& profile);

// Profile with the individuals of `a` followed by those of `b`.
// Errors: kDimensionMismatch.
Profile ConcatProfiles(const Profile& a, const Profile& b);

// Real score per alternative. Comparisons treat values within `tolerance`
// as equal; rankings are built by single-linkage clustering of the sorted
// scores so that "equal" is transitive on any given vector.
struct ScoreVector {
  std::vector<double> values;
  double tolerance = kDefaultTolerance;

  ScoreVector() = default;
  explicit ScoreVector(std::vector<double> v, double tol = kDefaultTolerance)
      : values(std::move(v)), tolerance(tol) {}

  int size() const { return static_cast<int>(values.size()); }
  double operator[](int i) const { return values[i]; }

  bool Greater(int i, int j) const { return values[i] > values[j] + tolerance; }
  bool Equivalent(int i, int j) const { return !Greater(i, j) && !Greater(j, i); }
};

// Points indexed by the number of defeated opponents 0..n-1; non-negative and
// non-decreasing. Errors: kInvalidArgument.
class PositionalWeights {
 public:
  explicit PositionalWeights(std::vector<double> points);
  int size() const { return static_cast<int>(points_.size()); }
  double operator[](int defeated) const { return points_[defeated]; }

 private:
  std::vector<double> points_;
};

// Weights indexed by aggregate support 0..m; non-negative and non-decreasing.
// Real-valued support is mapped by linear interpolation between neighbouring
// integer indices. Errors: kInvalidArgument.
class LobbyWeights {
 public:
  explicit LobbyWeights(std::vector<double> weights);
  int size() const { return static_cast<int>(weights_.size()); }
  double operator[](int support) const { return weights_[support]; }
  double Interpolate(double support) const;

 private:
  std::vector<double> weights_;
};

}  // namespace ranklab

#endif  // RANKLAB_PROFILE_H_
