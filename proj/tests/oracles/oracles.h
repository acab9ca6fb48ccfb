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

#ifndef RANKLAB_TESTS_ORACLES_ORACLES_H_
#define RANKLAB_TESTS_ORACLES_ORACLES_H_

// Reference computations that share no code with the library: factorial
// enumeration, direct evaluation of definitions, and Eigen linear algebra.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

namespace ranklab::oracle {

using RawMatrix = std::vector<std::vector<double>>;
using RawProfile = std::vector<RawMatrix>;

struct Pair {
  double outcome;
  double score;
};

struct PairingResult {
  bool exists = false;
  // Some dominating pairing has a strict inequality in some component.
  bool strict = false;
};

// Tries every bijection u[k] -> v[perm[k]].
inline PairingResult EnumeratePairings(const std::vector<Pair>& u, const std::vector<Pair>& v) {
  std::vector<int> perm(u.size());
  std::iota(perm.begin(), perm.end(), 0);
  PairingResult result;
  do {
    bool ok = true;
    bool strict = false;
    for (std::size_t k = 0; k < u.size() && ok; ++k) {
      const Pair& a = u[k];
      const Pair& b = v[perm[k]];
      ok = a.outcome >= b.outcome && a.score >= b.score;
      strict = strict || a.outcome > b.outcome || a.score > b.score;
    }
    if (ok) {
      result.exists = true;
      result.strict = result.strict || strict;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

// Matrix of a linear order given best first.
inline RawMatrix OrderMatrix(const std::vector<int>& order) {
  const std::size_t n = order.size();
  RawMatrix r(n, std::vector<double>(n, 0.0));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) r[order[x]][order[y]] = 1.0;
  }
  return r;
}

// sum_p sum_{i != j} |r_ij - a_ij^p|, straight from the definition.
inline double KemenyObjective(const std::vector<int>& order, const RawProfile& profile) {
  const RawMatrix r = OrderMatrix(order);
  double total = 0.0;
  for (const RawMatrix& a : profile) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (i != j) total += std::abs(r[i][j] - a[i][j]);
      }
    }
  }
  return total;
}

struct KemenyScan {
  double best = INFINITY;
  std::vector<std::vector<int>> medians;
};

// Full scan with orders generated by Heap's algorithm, then sorted.
inline KemenyScan FullKemenyScan(const RawProfile& profile) {
  const int n = static_cast<int>(profile.front().size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> all;
  std::vector<int> c(n, 0);
  all.push_back(order);
  for (int i = 1; i < n;) {
    if (c[i] < i) {
      std::swap(order[i % 2 == 0 ? 0 : c[i]], order[i]);
      all.push_back(order);
      ++c[i];
      i = 1;
    } else {
      c[i] = 0;
      ++i;
    }
  }
  KemenyScan scan;
  for (const auto& o : all) scan.best = std::min(scan.best, KemenyObjective(o, profile));
  for (const auto& o : all) {
    if (KemenyObjective(o, profile) <= scan.best + 1e-9) scan.medians.push_back(o);
  }
  std::sort(scan.medians.begin(), scan.medians.end());
  return scan;
}

inline int Individuals(const RawProfile& p) { return static_cast<int>(p.size()); }
inline int Alternatives(const RawProfile& p) { return static_cast<int>(p.front().size()); }

// Aggregated outcomes sum_p a_ij^p.
inline Eigen::MatrixXd Support(const RawProfile& profile) {
  const int n = Alternatives(profile);
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  for (const RawMatrix& a : profile) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) s(i, j) += a[i][j];
    }
  }
  return s;
}

// Row-sum system gamma sum_j (S_ij - S_ji) - m sum_j (s_i - s_j) - s_i / eps = 0
// assembled as a dense Eigen system.
inline std::vector<double> EigenRowSum(const RawProfile& profile, double eps) {
  const int n = Alternatives(profile);
  const double m = Individuals(profile);
  const double gamma = 1.0 / eps + m * n;
  const Eigen::MatrixXd s = Support(profile);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      b(i) -= gamma * (s(i, j) - s(j, i));
      a(i, i) -= m + 1.0 / eps / (n - 1);
      a(i, j) += m;
    }
  }
  const Eigen::VectorXd x = a.fullPivLu().solve(b);
  return {x.data(), x.data() + n};
}

// Least squares normal equations mn sum_j (S_ij - S_ji) + m sum_j (s_j - s_i) = 0
// with sum s = 0, solved as an overdetermined system by QR.
inline std::vector<double> EigenLeastSquares(const RawProfile& profile) {
  const int n = Alternatives(profile);
  const double m = Individuals(profile);
  const Eigen::MatrixXd s = Support(profile);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n + 1, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      b(i) -= m * n * (s(i, j) - s(j, i));
      a(i, i) -= m;
      a(i, j) += m;
    }
    a(n, i) = 1.0;
  }
  const Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
  return {x.data(), x.data() + n};
}

// Katz: sum_j S_ij (eps s_j + 1) - s_i sum_j S_ij / (m (n-1)) = 0.
inline std::vector<double> EigenKatz(const RawProfile& profile, double eps) {
  const int n = Alternatives(profile);
  const double m = Individuals(profile);
  const Eigen::MatrixXd s = Support(profile);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      a(i, j) += eps * s(i, j);
      a(i, i) -= s(i, j) / (m * (n - 1));
      b(i) -= s(i, j);
    }
  }
  const Eigen::VectorXd x = a.fullPivLu().solve(b);
  return {x.data(), x.data() + n};
}

// Rows of an alternative dominate under some opponent pairing: tried over all
// permutations.
inline bool RowDominatesByPermutation(std::vector<double> upper, const std::vector<double>& lower) {
  std::sort(upper.begin(), upper.end());
  do {
    bool ok = true;
    for (std::size_t k = 0; k < upper.size() && ok; ++k) ok = upper[k] >= lower[k];
    if (ok) return true;
  } while (std::next_permutation(upper.begin(), upper.end()));
  return false;
}

// True when some reordering of b's entries makes a <= b everywhere, over
// whole blocks of `width` coordinates.
inline bool BlocksDominatedByPermutation(const std::vector<double>& a, const std::vector<double>& b, int width) {
  const int blocks = static_cast<int>(a.size()) / width;
  std::vector<int> perm(blocks);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int k = 0; k < blocks && ok; ++k) {
      for (int c = 0; c < width && ok; ++c) ok = a[k * width + c] <= b[perm[k] * width + c];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace ranklab::oracle

#endif  // RANKLAB_TESTS_ORACLES_ORACLES_H_
