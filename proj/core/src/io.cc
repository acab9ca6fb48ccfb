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

#include "ranklab/io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ranklab/error.h"

namespace ranklab {
namespace {

using nlohmann::json;

constexpr double kMaxExactInteger = 9007199254740992.0;  // 2^53

json Parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed JSON: ") + e.what());
  }
}

double Number(const json& value, const char* what) {
  if (!value.is_number()) throw Error(ErrorCode::kParseError, std::string(what) + " must be a number");
  return value.get<double>();
}

int Integer(const json& value, const char* what) {
  if (!value.is_number_integer()) throw Error(ErrorCode::kParseError, std::string(what) + " must be an integer");
  return value.get<int>();
}

const json& Field(const json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw Error(ErrorCode::kParseError, std::string("missing field \"") + key + "\"");
  }
  return object.at(key);
}

std::vector<double> NumberArray(const json& value, const char* what) {
  if (!value.is_array()) throw Error(ErrorCode::kParseError, std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(value.size());
  for (const json& v : value) out.push_back(Number(v, what));
  return out;
}

void AppendNumbers(std::string& out, const std::vector<double>& values) {
  out += '[';
  for (std::size_t c = 0; c < values.size(); ++c) {
    if (c > 0) out += ',';
    out += FormatNumber(values[c]);
  }
  out += ']';
}

double ParseCsvNumber(std::string_view field) {
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
  while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r')) {
    field.remove_suffix(1);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw Error(ErrorCode::kParseError, "bad CSV number \"" + std::string(field) + "\"");
  }
  return value;
}

}  // namespace

std::string FormatNumber(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::kInvalidArgument, "cannot serialize a non-finite number");
  if (value == 0.0) return std::signbit(value) ? "-0.0" : "0";
  if (value == std::trunc(value) && std::abs(value) <= kMaxExactInteger) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.0f", value);
    return buf;
  }
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string ProfileToJson(const Profile& profile) {
  const int n = profile.alternatives();
  std::string out = "{\"n\":" + std::to_string(n) + ",\"m\":" + std::to_string(profile.individuals()) +
                    ",\"matrices\":[";
  for (int p = 0; p < profile.individuals(); ++p) {
    if (p > 0) out += ',';
    out += '[';
    for (int i = 0; i < n; ++i) {
      if (i > 0) out += ',';
      std::vector<double> row(n);
      for (int j = 0; j < n; ++j) row[j] = profile.outcome(p, i, j);
      AppendNumbers(out, row);
    }
    out += ']';
  }
  out += "]}";
  return out;
}

Profile ProfileFromJson(std::string_view text) {
  const json doc = Parse(text);
  const int n = Integer(Field(doc, "n"), "n");
  const int m = Integer(Field(doc, "m"), "m");
  const json& mats = Field(doc, "matrices");
  if (!mats.is_array()) throw Error(ErrorCode::kParseError, "\"matrices\" must be an array");
  std::vector<Profile::Matrix> matrices;
  for (const json& mat : mats) {
    if (!mat.is_array()) throw Error(ErrorCode::kParseError, "each matrix must be an array of rows");
    Profile::Matrix rows;
    for (const json& row : mat) rows.push_back(NumberArray(row, "matrix entry"));
    matrices.push_back(std::move(rows));
  }
  return Profile::FromMatrices(n, m, matrices);
}

std::string MatrixToCsv(const Profile& profile, int individual) {
  std::string out;
  char buf[40];
  for (int i = 0; i < profile.alternatives(); ++i) {
    for (int j = 0; j < profile.alternatives(); ++j) {
      if (j > 0) out += ',';
      std::snprintf(buf, sizeof(buf), "%.17g", profile.outcome(individual, i, j));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

Profile ProfileFromCsv(const std::vector<std::string>& matrices) {
  std::vector<Profile::Matrix> parsed;
  for (const std::string& text : matrices) {
    Profile::Matrix rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
      std::vector<double> row;
      std::string_view rest = line;
      while (true) {
        const std::size_t comma = rest.find(',');
        row.push_back(ParseCsvNumber(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      rows.push_back(std::move(row));
    }
    parsed.push_back(std::move(rows));
  }
  if (parsed.empty()) throw Error(ErrorCode::kParseError, "no CSV matrices given");
  const int n = static_cast<int>(parsed.front().size());
  return Profile::FromMatrices(n, static_cast<int>(parsed.size()), parsed);
}

std::string ScoresToJson(const ScoreVector& scores) {
  std::string out = "{\"scores\":";
  AppendNumbers(out, scores.values);
  out += '}';
  return out;
}

std::string ScoresToCsv(const ScoreVector& scores) {
  std::string out = "alternative,score\n";
  char buf[40];
  for (int i = 0; i < scores.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", scores[i]);
    out += std::to_string(i + 1) + ',' + buf + '\n';
  }
  return out;
}

std::vector<double> ScoresFromJson(std::string_view text) {
  const json doc = Parse(text);
  if (doc.is_array()) return NumberArray(doc, "score");
  return NumberArray(Field(doc, "scores"), "score");
}

ParetianSet ParetianSetFromJson(std::string_view text) {
  const json doc = Parse(text);
  const int k = Integer(Field(doc, "k"), "k");
  const json& pts = Field(doc, "points");
  if (!pts.is_array()) throw Error(ErrorCode::kParseError, "\"points\" must be an array");
  std::vector<Point> points;
  for (const json& p : pts) {
    points.push_back(NumberArray(p, "point coordinate"));
    if (static_cast<int>(points.back().size()) != k) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "point " + std::to_string(points.size()) + " does not have k = " + std::to_string(k) +
                      " coordinates",
                  {static_cast<int>(points.size())});
    }
  }
  std::vector<double> values = NumberArray(Field(doc, "values"), "value");
  if (doc.contains("f_min") || doc.contains("f_max")) {
    return ParetianSet::Build(std::move(points), std::move(values), Number(Field(doc, "f_min"), "f_min"),
                              Number(Field(doc, "f_max"), "f_max"));
  }
  return ParetianSet::Build(std::move(points), std::move(values));
}

std::vector<Point> QueriesFromJson(std::string_view text) {
  json doc = Parse(text);
  if (doc.is_object()) doc = Field(doc, "queries");
  if (!doc.is_array()) throw Error(ErrorCode::kParseError, "queries must be an array of points");
  std::vector<Point> out;
  for (const json& q : doc) out.push_back(NumberArray(q, "query coordinate"));
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

}  // namespace ranklab
