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

#ifndef RANKLAB_MATCHING_H_
#define RANKLAB_MATCHING_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace ranklab {

// Perfect matching between two sides of equal size by augmenting paths.
// `edge(l, r)` says whether left vertex l may be paired with right vertex r.
// Returns match[l] = r, or nullopt when no perfect matching exists.
std::optional<std::vector<int>> FindPerfectMatching(int size, const std::function<bool(int, int)>& edge);

// Allocation-free variant for at most 64 vertices per side: bit r of
// adjacency[l] marks the edge (l, r).
bool HasPerfectMatching(std::span<const std::uint64_t> adjacency);

}  // namespace ranklab

#endif  // RANKLAB_MATCHING_H_
