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

#include "ranklab/permuted_dominance.h"

#include <algorithm>
#include <functional>

#include "ranklab/matching.h"

namespace ranklab {

bool SortedRowDominates(std::span<const double> upper, std::span<const double> lower) {
  if (upper.size() != lower.size()) return false;
  std::vector<double> a(upper.begin(), upper.end());
  std::vector<double> b(lower.begin(), lower.end());
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return false;
  }
  return true;
}

PermutedDominance::PermutedDominance(const Profile& profile)
    : n_(profile.alternatives()), weak_(static_cast<std::size_t>(n_) * n_, false) {
  const int m = profile.individuals();
  // rows[p][i]: outcomes of i against its opponents in individual p.
  std::vector<std::vector<std::vector<double>>> rows(m, std::vector<std::vector<double>>(n_));
  for (int p = 0; p < m; ++p) {
    for (int i = 0; i < n_; ++i) {
      for (int k = 0; k < n_; ++k) {
        if (k != i) rows[p][i].push_back(profile.outcome(p, i, k));
      }
    }
  }
  signatures_.resize(n_);
  for (int i = 0; i < n_; ++i) {
    for (int p = 0; p < m; ++p) {
      std::vector<double> row = rows[p][i];
      std::sort(row.begin(), row.end(), std::greater<>());
      signatures_[i].push_back(std::move(row));
    }
    std::sort(signatures_[i].begin(), signatures_[i].end());
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i == j) {
        weak_[static_cast<std::size_t>(i) * n_ + j] = true;
        continue;
      }
      const auto matching =
          FindPerfectMatching(m, [&](int p, int q) { return SortedRowDominates(rows[p][i], rows[q][j]); });
      weak_[static_cast<std::size_t>(i) * n_ + j] = matching.has_value();
    }
  }
}

bool PermutedDominance::IsPartialOrderModuloEquivalence() const {
  for (int i = 0; i < n_; ++i) {
    if (!WeaklyDominates(i, i)) return false;
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        if (WeaklyDominates(i, j) && WeaklyDominates(j, k) && !WeaklyDominates(i, k)) return false;
      }
    }
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (Equivalent(i, j) && signatures_[i] != signatures_[j]) return false;
    }
  }
  return true;
}

}  // namespace ranklab
