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

#ifndef RANKLAB_GENERATOR_H_
#define RANKLAB_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "ranklab/profile.h"

namespace ranklab {

enum class GeneratorMode {
  kInterior,     // outcomes uniform in (low, high), complemented
  kCrisp,        // outcomes from {0, 1/2, 1}
  kWeakOrder,    // random rank vectors with ties
  kLinearOrder,  // random permutations
};

std::string_view GeneratorModeName(GeneratorMode mode);
std::optional<GeneratorMode> ParseGeneratorMode(std::string_view name);

struct GeneratorConfig {
  int n_min = 2;
  int n_max = 5;
  int m_min = 1;
  int m_max = 4;
  GeneratorMode mode = GeneratorMode::kInterior;
  std::uint64_t seed = 0;
  double interior_low = 0.01;
  double interior_high = 0.99;

  // kInvalidArgument on empty ranges, n_min < 2, m_min < 1, or a bad
  // interior interval.
  void Validate() const;
};

// Platform-independent draws on top of std::mt19937_64 (whose output
// sequence is fixed by the standard, unlike the std distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Bits() { return engine_(); }
  // Uniform in the open interval (0, 1).
  double Open01();
  // Uniform in the open interval (low, high).
  double Uniform(double low, double high) { return low + (high - low) * Open01(); }
  // Uniform integer in [low, high].
  int Int(int low, int high);
  std::vector<int> Permutation(int size);

 private:
  std::mt19937_64 engine_;
};

// Independent stream seed for `stream` under a master `seed` (splitmix64).
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

// Deterministic profile stream: identical configs give identical streams.
class ProfileGenerator {
 public:
  explicit ProfileGenerator(const GeneratorConfig& config);

  // Dimensions drawn from the configured ranges.
  Profile Next();
  // Fixed dimensions, outcomes per the configured mode.
  Profile Next(int n, int m);

  int DrawAlternatives() { return rng_.Int(config_.n_min, config_.n_max); }
  int DrawIndividuals() { return rng_.Int(config_.m_min, config_.m_max); }

  const GeneratorConfig& config() const { return config_; }
  Rng& rng() { return rng_; }

 private:
  GeneratorConfig config_;
  Rng rng_;
};

}  // namespace ranklab

#endif  // RANKLAB_GENERATOR_H_
