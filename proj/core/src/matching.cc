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

#include "ranklab/matching.h"

#include "ranklab/error.h"

namespace ranklab {
namespace {

bool Augment(int left, const std::vector<std::vector<int>>& adj, std::vector<bool>& visited,
             std::vector<int>& right_match) {
  for (int r : adj[left]) {
    if (visited[r]) continue;
    visited[r] = true;
    if (right_match[r] < 0 || Augment(right_match[r], adj, visited, right_match)) {
      right_match[r] = left;
      return true;
    }
  }
  return false;
}

bool AugmentMask(int left, std::span<const std::uint64_t> adjacency, std::uint64_t& visited, int* right_match) {
  std::uint64_t options = adjacency[left] & ~visited;
  while (options != 0) {
    const int r = __builtin_ctzll(options);
    options &= options - 1;
    visited |= std::uint64_t{1} << r;
    if (right_match[r] < 0 || AugmentMask(right_match[r], adjacency, visited, right_match)) {
      right_match[r] = left;
      return true;
    }
  }
  return false;
}

}  // namespace

bool HasPerfectMatching(std::span<const std::uint64_t> adjacency) {
  const int size = static_cast<int>(adjacency.size());
  if (size > 64) throw Error(ErrorCode::kTooLarge, "bitmask matching supports at most 64 vertices");
  int right_match[64];
  for (int r = 0; r < size; ++r) right_match[r] = -1;
  for (int l = 0; l < size; ++l) {
    std::uint64_t visited = 0;
    if (!AugmentMask(l, adjacency, visited, right_match)) return false;
  }
  return true;
}

std::optional<std::vector<int>> FindPerfectMatching(int size, const std::function<bool(int, int)>& edge) {
  std::vector<std::vector<int>> adj(size);
  for (int l = 0; l < size; ++l) {
    for (int r = 0; r < size; ++r) {
      if (edge(l, r)) adj[l].push_back(r);
    }
    if (adj[l].empty()) return std::nullopt;
  }
  std::vector<int> right_match(size, -1);
  for (int l = 0; l < size; ++l) {
    std::vector<bool> visited(size, false);
    if (!Augment(l, adj, visited, right_match)) return std::nullopt;
  }
  std::vector<int> match(size, -1);
  for (int r = 0; r < size; ++r) match[right_match[r]] = r;
  return match;
}

}  // namespace ranklab
