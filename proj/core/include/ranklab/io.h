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

#ifndef RANKLAB_IO_H_
#define RANKLAB_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "ranklab/paretian.h"
#include "ranklab/profile.h"

namespace ranklab {

// Text formats. The grammar is written out in docs/formats.md. Parse
// failures raise kParseError; well-formed input that breaks a profile
// invariant raises the profile's own error code.

// Integral values print as integers, anything else as the shortest decimal
// that parses back to the same double.
std::string FormatNumber(double value);

// {"n":N,"m":M,"matrices":[[[...],...],...]}
std::string ProfileToJson(const Profile& profile);
Profile ProfileFromJson(std::string_view text);

// One matrix per individual: n lines of n comma-separated numbers, written
// with 17 significant digits. Blank lines and lines starting with '#' are
// skipped.
std::string MatrixToCsv(const Profile& profile, int individual);
Profile ProfileFromCsv(const std::vector<std::string>& matrices);

// {"scores":[...]}
std::string ScoresToJson(const ScoreVector& scores);
// One line "alternative,score" per alternative, alternatives 1-based, after
// the header line "alternative,score".
std::string ScoresToCsv(const ScoreVector& scores);
// Accepts {"scores":[...]} or a bare array of numbers.
std::vector<double> ScoresFromJson(std::string_view text);

// {"k":K,"points":[[...],...],"values":[...]}, optionally with "f_min" and
// "f_max".
ParetianSet ParetianSetFromJson(std::string_view text);
// Query points: an array of arrays, or {"queries":[[...],...]}.
std::vector<Point> QueriesFromJson(std::string_view text);

// Errors: kIoError.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace ranklab

#endif  // RANKLAB_IO_H_
