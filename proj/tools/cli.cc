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

#include "cli.h"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ranklab/axioms.h"
#include "ranklab/error.h"
#include "ranklab/generator.h"
#include "ranklab/implicit_solvers.h"
#include "ranklab/io.h"
#include "ranklab/paretian.h"
#include "ranklab/procedures.h"
#include "ranklab/profile.h"
#include "ranklab/rank_orders.h"
#include "ranklab/subprocess.h"

namespace ranklab::cli {
namespace {

using nlohmann::json;

json Num(double v) {
  if (v == std::trunc(v) && std::abs(v) <= 9007199254740992.0) return static_cast<std::int64_t>(v);
  return v;
}

json NumArray(const std::vector<double>& values) {
  json out = json::array();
  for (double v : values) out.push_back(Num(v));
  return out;
}

json OneBased(const std::vector<int>& items) {
  json out = json::array();
  for (int a : items) out.push_back(a + 1);
  return out;
}

json RankingJson(const Ranking& ranking) {
  json out = json::array();
  for (const auto& stratum : ranking.strata) out.push_back(OneBased(stratum));
  return out;
}

std::uint64_t Fnv1a(const std::vector<std::string>& args) {
  std::uint64_t h = 14695981039346656037ull;
  for (const std::string& a : args) {
    for (unsigned char c : a) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0;
    h *= 1099511628211ull;
  }
  return h;
}

int ExitCodeFor(ErrorCode code) {
  if (code == ErrorCode::kProtocolError) return kExitProtocol;
  if (IsSolverFailure(code)) return kExitSolver;
  return kExitValidation;
}

double DefaultTolerance() {
  const char* env = std::getenv("RANKLAB_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !std::isfinite(tol) || tol < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, std::string("RANKLAB_TOL is not a non-negative number: ") + env);
  }
  return tol;
}

// State shared by the subcommands.
struct Common {
  std::vector<std::string> inputs;
  std::string out_file;
  std::string format = "json";
  std::optional<double> tol;
  std::istream* in = nullptr;

  double Tolerance() const { return tol ? *tol : DefaultTolerance(); }

  std::string ReadSource(const std::string& path) const {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(*in), std::istreambuf_iterator<char>());
    return ReadFile(path);
  }

  Profile LoadProfile() const {
    if (inputs.empty()) return ProfileFromJson(ReadSource("-"));
    const bool csv = inputs.front().size() >= 4 && inputs.front().ends_with(".csv");
    if (!csv) {
      if (inputs.size() != 1) throw Error(ErrorCode::kInvalidArgument, "JSON input takes exactly one file");
      return ProfileFromJson(ReadSource(inputs.front()));
    }
    std::vector<std::string> matrices;
    for (const std::string& path : inputs) matrices.push_back(ReadSource(path));
    return ProfileFromCsv(matrices);
  }
};

struct MethodFlags {
  std::string method = "borda";
  std::string exec;
  double eps = 1.0;
  double nu = 0.5;
  std::string points_file;
  std::string lobby_file;
  int timeout_ms = 60000;

  ProcedureHandle Build(const Common& common) const {
    const double tol = common.Tolerance();
    if (!exec.empty()) return ExternalProcedure(exec, tol, timeout_ms);
    ProcedureOptions options;
    options.epsilon = eps;
    options.nu = nu;
    options.tolerance = tol;
    if (!points_file.empty()) options.points = ScoresFromJson(common.ReadSource(points_file));
    if (!lobby_file.empty()) options.lobby = ScoresFromJson(common.ReadSource(lobby_file));
    return MakeProcedure(method, options);
  }
};

void AddMethodFlags(CLI::App* cmd, MethodFlags& flags, bool allow_exec) {
  cmd->add_option("--method", flags.method, "Scoring procedure")->capture_default_str();
  cmd->add_option("--eps", flags.eps, "Epsilon for katz and grs")->capture_default_str();
  cmd->add_option("--nu", flags.nu, "Point-score weight for convex")->capture_default_str();
  cmd->add_option("--points", flags.points_file, "JSON array of positional points");
  cmd->add_option("--lobby", flags.lobby_file, "JSON array of lobby weights");
  if (allow_exec) {
    cmd->add_option("--exec", flags.exec, "External procedure command (subprocess protocol)");
    cmd->add_option("--timeout-ms", flags.timeout_ms, "Per-call limit for --exec")->capture_default_str();
  }
}

void AddCommonFlags(CLI::App* cmd, Common& common, bool with_input) {
  if (with_input) cmd->add_option("--input", common.inputs, "Profile JSON, or one CSV file per individual; - is stdin");
  cmd->add_option("--out", common.out_file, "Write a run report JSON here");
  cmd->add_option("--tol", common.tol, "Score tolerance (overrides RANKLAB_TOL)");
}

json ViolationJson(const AxiomViolation& v) {
  json out;
  out["trial"] = v.trial;
  out["detail"] = v.detail;
  out["profiles"] = json::array();
  for (const Profile& p : v.profiles) out["profiles"].push_back(json::parse(ProfileToJson(p)));
  out["scores"] = json::array();
  for (const ScoreVector& s : v.scores) out["scores"].push_back(NumArray(s.values));
  if (v.self_consistency) {
    const ViolationReport& r = *v.self_consistency;
    out["majorization"] = {{"i", r.i + 1},
                           {"j", r.j + 1},
                           {"strict", r.kind == ViolationKind::kStrict},
                           {"mapping", OneBased(r.witness.mapping)}};
  }
  return out;
}

json SummaryJson(const FuzzSummary& s) {
  json out;
  out["axiom"] = std::string(AxiomName(s.axiom));
  out["procedure"] = s.procedure;
  out["trials"] = s.trials;
  out["violating_trials"] = s.violating_trials;
  out["checks"] = s.checks;
  out["strict_violations"] = s.strict_violations;
  out["passed"] = s.passed();
  out["violations"] = json::array();
  for (const AxiomViolation& v : s.violations) out["violations"].push_back(ViolationJson(v));
  return out;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Preference aggregation toolkit", "ranklab"};
  app.require_subcommand(1);
  Common common;
  common.in = &in;
  MethodFlags method;

  CLI::App* score = app.add_subcommand("score", "Score the alternatives of a profile");
  AddCommonFlags(score, common, true);
  AddMethodFlags(score, method, true);
  score->add_option("--format", common.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::string scores_file;
  CLI::App* residual = app.add_subcommand("residual", "Evaluate an implicit system at given scores");
  AddCommonFlags(residual, common, true);
  residual->add_option("--method", method.method, "Implicit procedure")->required();
  residual->add_option("--eps", method.eps, "Epsilon for katz and grs");
  residual->add_option("--scores", scores_file, "Scores JSON")->required();

  std::string axiom_name = "self-consistency";
  FuzzOptions fuzz;
  fuzz.seed = 0;
  std::string mode = "interior";
  CLI::App* check = app.add_subcommand("check", "Randomized falsification of an axiom");
  AddCommonFlags(check, common, false);
  AddMethodFlags(check, method, true);
  check->add_option("--axiom", axiom_name, "Axiom name, or all")->capture_default_str();
  check->add_option("--trials", fuzz.trials, "Number of trials")->capture_default_str();
  check->add_option("--seed", fuzz.seed, "Master seed")->capture_default_str();
  check->add_option("--threads", fuzz.threads, "Worker threads (0 = hardware)")->capture_default_str();
  check->add_option("--mode", mode, "Profile generator mode")->capture_default_str();
  check->add_option("--n-min", fuzz.generator.n_min)->capture_default_str();
  check->add_option("--n-max", fuzz.generator.n_max)->capture_default_str();
  check->add_option("--m-min", fuzz.generator.m_min)->capture_default_str();
  check->add_option("--m-max", fuzz.generator.m_max)->capture_default_str();
  check->add_option("--max-reports", fuzz.max_reports, "Stored witnesses per axiom")->capture_default_str();

  int cap = kDefaultKemenyCap;
  CLI::App* kemeny = app.add_subcommand("kemeny", "Exact Kemeny median");
  AddCommonFlags(kemeny, common, true);
  kemeny->add_option("--cap", cap, "Largest n for the exhaustive scan")->capture_default_str();

  bool with_ranking = false;
  CLI::App* choice = app.add_subcommand("choice", "Chosen alternatives (top stratum of the scores)");
  AddCommonFlags(choice, common, true);
  AddMethodFlags(choice, method, true);
  choice->add_flag("--ranking", with_ranking, "Also print the full ranking");
  choice->footer("--method unanimity selects the closeness-to-unanimity choice.");

  std::string set_file;
  std::string queries_file;
  CLI::App* extend = app.add_subcommand("extend", "Evaluate the monotone extension of a Paretian set");
  AddCommonFlags(extend, common, false);
  extend->add_option("--set", set_file, "Paretian set JSON")->required();
  extend->add_option("--queries", queries_file, "Query points JSON")->required();

  GeneratorConfig gen;
  int count = 1;
  std::string gen_mode = "interior";
  std::string output_file;
  CLI::App* generate = app.add_subcommand("generate", "Seeded random profiles, one JSON per line");
  AddCommonFlags(generate, common, false);
  generate->add_option("--mode", gen_mode, "interior, crisp, weak-order or linear-order")->capture_default_str();
  generate->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  generate->add_option("--count", count, "Number of profiles")->capture_default_str();
  generate->add_option("--n-min", gen.n_min)->capture_default_str();
  generate->add_option("--n-max", gen.n_max)->capture_default_str();
  generate->add_option("--m-min", gen.m_min)->capture_default_str();
  generate->add_option("--m-max", gen.m_max)->capture_default_str();
  generate->add_option("--output", output_file, "Write the stream here instead of stdout");

  std::vector<std::string> methods = {"borda", "grs", "lsq", "zermelo"};
  CLI::App* compare = app.add_subcommand("compare", "Scores and rankings of several procedures side by side");
  AddCommonFlags(compare, common, true);
  compare->add_option("--methods", methods, "Procedures to compare")->delimiter(',')->capture_default_str();
  compare->add_option("--eps", method.eps, "Epsilon for katz and grs");
  compare->add_option("--nu", method.nu, "Point-score weight for convex");

  const auto started = std::chrono::steady_clock::now();
  auto report = [&](const json& results, int code) {
    if (common.out_file.empty()) return;
    json r;
    r["command"] = args;
    char hash[17];
    std::snprintf(hash, sizeof(hash), "%016llx", static_cast<unsigned long long>(Fnv1a(args)));
    r["config_hash"] = hash;
    r["results"] = results;
    r["exit_code"] = code;
    r["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    WriteFile(common.out_file, r.dump(2) + "\n");
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (score->parsed()) {
      const Profile profile = common.LoadProfile();
      const ScoreVector s = method.Build(common)(profile);
      if (common.format == "csv") {
        out << ScoresToCsv(s);
      } else {
        out << json{{"scores", NumArray(s.values)}}.dump() << "\n";
      }
      report({{"scores", NumArray(s.values)}}, kExitOk);
      return kExitOk;
    }

    if (residual->parsed()) {
      const auto kind = ParseImplicitKind(method.method);
      if (!kind) throw Error(ErrorCode::kInvalidArgument, "residual needs an implicit procedure, got " + method.method);
      const Profile profile = common.LoadProfile();
      const std::vector<double> s = ScoresFromJson(common.ReadSource(scores_file));
      const std::vector<double> r = Residual(ImplicitProcedureSpec(*kind, method.eps), profile, s);
      double max_abs = 0.0;
      for (double v : r) max_abs = std::max(max_abs, std::abs(v));
      const json result = {{"residual", NumArray(r)}, {"max_abs", Num(max_abs)}};
      out << result.dump() << "\n";
      report(result, kExitOk);
      return kExitOk;
    }

    if (check->parsed()) {
      const auto gen_mode_parsed = ParseGeneratorMode(mode);
      if (!gen_mode_parsed) throw Error(ErrorCode::kInvalidArgument, "unknown generator mode " + mode);
      fuzz.generator.mode = *gen_mode_parsed;
      fuzz.tolerance = common.Tolerance();
      if (fuzz.threads <= 0) fuzz.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
      std::vector<Axiom> axioms;
      if (axiom_name == "all") {
        axioms = AllAxioms();
      } else if (auto a = ParseAxiom(axiom_name)) {
        axioms.push_back(*a);
      } else {
        throw Error(ErrorCode::kInvalidArgument, "unknown axiom " + axiom_name);
      }
      const ProcedureHandle proc = method.Build(common);
      json summaries = json::array();
      bool violated = false;
      for (Axiom a : axioms) {
        const FuzzSummary s = FuzzAxiom(proc, a, fuzz);
        violated = violated || !s.passed();
        summaries.push_back(SummaryJson(s));
      }
      const json result = axioms.size() == 1 ? summaries.front() : json{{"checks", summaries}};
      out << result.dump() << "\n";
      const int code = violated ? kExitViolations : kExitOk;
      report(result, code);
      return code;
    }

    if (kemeny->parsed()) {
      const KemenyResult k = KemenyMedian(common.LoadProfile(), cap);
      json medians = json::array();
      for (const auto& order : k.medians) medians.push_back(OneBased(order));
      const json result = {{"medians", medians}, {"distance", Num(k.distance)}};
      out << result.dump() << "\n";
      report(result, kExitOk);
      return kExitOk;
    }

    if (choice->parsed()) {
      const Profile profile = common.LoadProfile();
      json result;
      if (method.method == "unanimity" && method.exec.empty()) {
        result["choice"] = OneBased(ClosenessToUnanimityChoice(profile));
      } else {
        const ScoreVector s = method.Build(common)(profile);
        result["choice"] = OneBased(ChoiceFromScores(s));
        if (with_ranking) result["ranking"] = RankingJson(RankingFromScores(s));
      }
      out << result.dump() << "\n";
      report(result, kExitOk);
      return kExitOk;
    }

    if (extend->parsed()) {
      const ParetianSet set = ParetianSetFromJson(common.ReadSource(set_file));
      const MonotoneExtension f(set);
      std::vector<double> values;
      for (const Point& q : QueriesFromJson(common.ReadSource(queries_file))) values.push_back(f.Evaluate(q));
      const json result = {{"values", NumArray(values)}};
      out << result.dump() << "\n";
      report(result, kExitOk);
      return kExitOk;
    }

    if (generate->parsed()) {
      const auto parsed = ParseGeneratorMode(gen_mode);
      if (!parsed) throw Error(ErrorCode::kInvalidArgument, "unknown generator mode " + gen_mode);
      if (count < 0) throw Error(ErrorCode::kInvalidArgument, "--count must be non-negative");
      gen.mode = *parsed;
      ProfileGenerator generator(gen);
      std::string stream;
      for (int c = 0; c < count; ++c) stream += ProfileToJson(generator.Next()) + "\n";
      if (output_file.empty()) {
        out << stream;
      } else {
        WriteFile(output_file, stream);
      }
      report({{"profiles", count}, {"seed", gen.seed}, {"mode", gen_mode}}, kExitOk);
      return kExitOk;
    }

    if (compare->parsed()) {
      const Profile profile = common.LoadProfile();
      json rows = json::array();
      std::optional<Ranking> first;
      bool agree = true;
      for (const std::string& name : methods) {
        MethodFlags m = method;
        m.method = name;
        json row = {{"method", name}};
        try {
          const ScoreVector s = m.Build(common)(profile);
          const Ranking ranking = RankingFromScores(s);
          row["scores"] = NumArray(s.values);
          row["ranking"] = RankingJson(ranking);
          if (!first) first = ranking;
          agree = agree && ranking == *first;
        } catch (const Error& e) {
          if (e.code() == ErrorCode::kInvalidArgument) throw;
          row["error"] = {{"code", std::string(ErrorCodeName(e.code()))}, {"message", e.what()}};
        }
        rows.push_back(row);
      }
      const json result = {{"methods", rows}, {"rankings_agree", agree}};
      out << result.dump() << "\n";
      report(result, kExitOk);
      return kExitOk;
    }
  } catch (const Error& e) {
    const int code = ExitCodeFor(e.code());
    const json error = {{"error", {{"code", std::string(ErrorCodeName(e.code()))},
                                   {"message", e.what()},
                                   {"where", e.where()}}}};
    err << error.dump() << "\n";
    try {
      report(error, code);
    } catch (const Error&) {
    }
    return code;
  }
  return kExitValidation;
}

}  // namespace ranklab::cli
