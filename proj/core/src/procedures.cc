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

#include "ranklab/procedures.h"

#include <numeric>

#include "ranklab/direct_scores.h"
#include "ranklab/error.h"

namespace ranklab {
namespace {

std::vector<double> Identity(int size) {
  std::vector<double> w(size);
  std::iota(w.begin(), w.end(), 0.0);
  return w;
}

PositionalWeights PointsFor(const ProcedureOptions& options, const Profile& profile) {
  return PositionalWeights(options.points.value_or(Identity(profile.alternatives())));
}

LobbyWeights LobbyFor(const ProcedureOptions& options, const Profile& profile) {
  return LobbyWeights(options.lobby.value_or(Identity(profile.individuals() + 1)));
}

}  // namespace

const std::vector<std::string>& KnownProcedureNames() {
  static const std::vector<std::string> kNames = {
      "borda",  "down-borda", "up-borda", "factored",    "point",         "plurality",
      "lobby",  "convex",     "copeland", "grs",         "zermelo",       "katz",
      "lsq",    "daniels-lin", "daniels-ratio", "cowden", "constant-zero", "reversed-borda"};
  return kNames;
}

ProcedureHandle MakeProcedure(std::string_view name, const ProcedureOptions& options) {
  ProcedureHandle handle;
  handle.name = std::string(name);
  const double tol = options.tolerance;
  auto with_tol = [tol](ScoreVector s) {
    s.tolerance = tol;
    return s;
  };

  if (auto kind = ParseImplicitKind(name)) {
    const ImplicitProcedureSpec spec(*kind, options.epsilon);
    const SolverConfig solver = options.solver;
    handle.evaluate = [spec, solver, with_tol](const Profile& p) {
      return with_tol(Solve(spec, p, solver).scores);
    };
    handle.defined_on_crisp = *kind == ImplicitKind::kLeastSquares || *kind == ImplicitKind::kGeneralizedRowSum;
    return handle;
  }
  if (name == "borda") {
    handle.evaluate = [with_tol](const Profile& p) { return with_tol(ExtendedBorda(p)); };
  } else if (name == "down-borda") {
    handle.evaluate = [with_tol](const Profile& p) { return with_tol(DownSidedBorda(p)); };
  } else if (name == "up-borda") {
    handle.evaluate = [with_tol](const Profile& p) { return with_tol(UpSidedBorda(p)); };
  } else if (name == "factored") {
    handle.evaluate = [with_tol](const Profile& p) { return with_tol(FactoredBorda(WeakOrderRanks(p))); };
  } else if (name == "point") {
    handle.evaluate = [options, with_tol](const Profile& p) { return with_tol(PointScores(p, PointsFor(options, p))); };
  } else if (name == "plurality") {
    handle.evaluate = [with_tol](const Profile& p) { return with_tol(PluralityScores(p)); };
  } else if (name == "lobby") {
    handle.evaluate = [options, with_tol](const Profile& p) {
      return with_tol(LobbySizeScores(p, LobbyFor(options, p)));
    };
  } else if (name == "convex") {
    handle.evaluate = [options, with_tol](const Profile& p) {
      return with_tol(ConvexCombinationScores(p, PointsFor(options, p), LobbyFor(options, p), options.nu));
    };
  } else if (name == "copeland") {
    handle.evaluate = [with_tol](const Profile& p) { return with_tol(CopelandScores(p)); };
  } else if (name == "constant-zero") {
    handle.evaluate = [tol](const Profile& p) { return ScoreVector(std::vector<double>(p.alternatives(), 0.0), tol); };
  } else if (name == "reversed-borda") {
    handle.evaluate = [with_tol](const Profile& p) {
      ScoreVector s = ExtendedBorda(p);
      for (double& v : s.values) v = -v;
      return with_tol(std::move(s));
    };
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown procedure '" + std::string(name) + "'");
  }
  return handle;
}

}  // namespace ranklab
