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

#ifndef RANKLAB_PERMUTED_DOMINANCE_H_
#define RANKLAB_PERMUTED_DOMINANCE_H_

#include <span>
#include <vector>

#include "ranklab/profile.h"

namespace ranklab {

// Partial ordering of permuted dominance: i weakly dominates j when the
// individuals can be paired (p with sigma(p)) and, within each pair, the
// opponents of i can be paired with those of j so that every outcome of i is
// at least the paired outcome of j.
class PermutedDominance {
 public:
  explicit PermutedDominance(const Profile& profile);

  int size() const { return n_; }
  bool WeaklyDominates(int i, int j) const { return weak_[static_cast<std::size_t>(i) * n_ + j]; }
  bool StrictlyDominates(int i, int j) const { return WeaklyDominates(i, j) && !WeaklyDominates(j, i); }
  bool Equivalent(int i, int j) const { return WeaklyDominates(i, j) && WeaklyDominates(j, i); }

  // Reflexive and transitive, and mutually dominating alternatives have
  // identical multisets of sorted outcome rows (antisymmetry once equal rows
  // are identified).
  bool IsPartialOrderModuloEquivalence() const;

 private:
  int n_;
  std::vector<bool> weak_;
  // Per alternative: its sorted outcome rows, sorted across individuals.
  std::vector<std::vector<std::vector<double>>> signatures_;
};

// Whether some rearrangement of `lower` is dominated entrywise by `upper`.
// Decided by comparing both vectors sorted in descending order.
bool SortedRowDominates(std::span<const double> upper, std::span<const double> lower);

}  // namespace ranklab

#endif  // RANKLAB_PERMUTED_DOMINANCE_H_
