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

#ifndef RANKLAB_PROCEDURES_H_
#define RANKLAB_PROCEDURES_H_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ranklab/implicit_solvers.h"
#include "ranklab/profile.h"

namespace ranklab {

// A scoring procedure: profile in, one score per alternative out. The
// evaluator must be deterministic; the axiom harness may call it from
// several threads at once.
struct ProcedureHandle {
  std::string name;
  std::function<ScoreVector(const Profile&)> evaluate;
  // False for procedures that are undefined on some crisp single-individual
  // profiles (e.g. Zermelo, where every linear order breaks the Ford
  // condition).
  bool defined_on_crisp = true;

  ScoreVector operator()(const Profile& profile) const { return evaluate(profile); }
};

struct ProcedureOptions {
  double epsilon = 1.0;
  SolverConfig solver;
  // Positional points and lobby weights; when absent the identity weights
  // 0, 1, ... sized to the profile are used.
  std::optional<std::vector<double>> points;
  std::optional<std::vector<double>> lobby;
  double nu = 0.5;
  double tolerance = kDefaultTolerance;
};

// Known names: borda, down-borda, up-borda, factored, point, plurality,
// lobby, convex, copeland, grs, zermelo, katz, lsq, daniels-lin,
// daniels-ratio, cowden, constant-zero, reversed-borda.
// Errors: kInvalidArgument for unknown names.
ProcedureHandle MakeProcedure(std::string_view name, const ProcedureOptions& options = {});

const std::vector<std::string>& KnownProcedureNames();

}  // namespace ranklab

#endif  // RANKLAB_PROCEDURES_H_
