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

#include "ranklab/generator.h"

#include <limits>
#include <numeric>
#include <utility>

#include "ranklab/error.h"

namespace ranklab {

std::string_view GeneratorModeName(GeneratorMode mode) {
  switch (mode) {
    case GeneratorMode::kInterior:
      return "interior";
    case GeneratorMode::kCrisp:
      return "crisp";
    case GeneratorMode::kWeakOrder:
      return "weak-order";
    case GeneratorMode::kLinearOrder:
      return "linear-order";
  }
  return "unknown";
}

std::optional<GeneratorMode> ParseGeneratorMode(std::string_view name) {
  for (GeneratorMode mode : {GeneratorMode::kInterior, GeneratorMode::kCrisp, GeneratorMode::kWeakOrder,
                             GeneratorMode::kLinearOrder}) {
    if (GeneratorModeName(mode) == name) return mode;
  }
  return std::nullopt;
}

void GeneratorConfig::Validate() const {
  if (n_min < 2 || n_max < n_min) throw Error(ErrorCode::kInvalidArgument, "need 2 <= n_min <= n_max");
  if (m_min < 1 || m_max < m_min) throw Error(ErrorCode::kInvalidArgument, "need 1 <= m_min <= m_max");
  if (!(interior_low >= 0.0 && interior_low < interior_high && interior_high <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "interior interval must satisfy 0 <= low < high <= 1");
  }
}

double Rng::Open01() {
  // 53 random bits centred in their cell: never exactly 0 or 1.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

int Rng::Int(int low, int high) {
  const std::uint64_t range = static_cast<std::uint64_t>(static_cast<std::int64_t>(high) - low) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return static_cast<int>(static_cast<std::int64_t>(low) + static_cast<std::int64_t>(x % range));
}

std::vector<int> Rng::Permutation(int size) {
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = size - 1; i > 0; --i) std::swap(perm[i], perm[Int(0, i)]);
  return perm;
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ProfileGenerator::ProfileGenerator(const GeneratorConfig& config) : config_(config), rng_(config.seed) {
  config_.Validate();
}

Profile ProfileGenerator::Next() {
  const int n = DrawAlternatives();
  const int m = DrawIndividuals();
  return Next(n, m);
}

Profile ProfileGenerator::Next(int n, int m) {
  switch (config_.mode) {
    case GeneratorMode::kLinearOrder: {
      std::vector<std::vector<int>> orders;
      for (int p = 0; p < m; ++p) orders.push_back(rng_.Permutation(n));
      return FromLinearOrders(orders);
    }
    case GeneratorMode::kWeakOrder: {
      std::vector<std::vector<int>> ranks(m, std::vector<int>(n));
      for (auto& r : ranks) {
        for (int& v : r) v = rng_.Int(1, n);
      }
      return FromWeakOrders(ranks);
    }
    case GeneratorMode::kInterior:
    case GeneratorMode::kCrisp: {
      std::vector<Profile::Matrix> mats(m, Profile::Matrix(n, std::vector<double>(n, 0.0)));
      for (auto& a : mats) {
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            const double v = config_.mode == GeneratorMode::kInterior
                                 ? rng_.Uniform(config_.interior_low, config_.interior_high)
                                 : 0.5 * rng_.Int(0, 2);
            a[i][j] = v;
            a[j][i] = 1.0 - v;
          }
        }
      }
      return Profile::FromMatrices(n, m, mats);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown generator mode");
}

}  // namespace ranklab
