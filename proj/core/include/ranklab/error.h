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

#ifndef RANKLAB_ERROR_H_
#define RANKLAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ranklab {

enum class ErrorCode {
  kComplementarityViolation,
  kNonzeroDiagonal,
  kOutOfRange,
  kMalformedOrder,
  kMalformedRanks,
  kElementOutOfRange,
  kDimensionMismatch,
  kNotLinearOrderProfile,
  kNotWeakOrderProfile,
  kNotSingleRelation,
  kInvalidArgument,
  kDomainViolation,
  kNotConverged,
  kSingularSystem,
  kFordConditionViolated,
  kPositivityLost,
  kCardinalityMismatch,
  kUnsupportedAxiomForProcedure,
  kNotParetian,
  kTooLarge,
  kProtocolError,
  kParseError,
  kIoError,
};

// Stable machine-readable name, e.g. "FORD_CONDITION".
std::string_view ErrorCodeName(ErrorCode code);

// True for failures of a numerical procedure on otherwise valid input.
bool IsSolverFailure(ErrorCode code);

// All library failures are reported through this exception. `where` holds the
// 1-based coordinates named in the message (individual, row, column, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<int> where = {})
      : std::runtime_error(message), code_(code), where_(std::move(where)) {}

  ErrorCode code() const { return code_; }
  const std::vector<int>& where() const { return where_; }

 private:
  ErrorCode code_;
  std::vector<int> where_;
};

}  // namespace ranklab

#endif  // RANKLAB_ERROR_H_
