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

#include "ranklab/error.h"

namespace ranklab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kComplementarityViolation:
      return "COMPLEMENTARITY_VIOLATION";
    case ErrorCode::kNonzeroDiagonal:
      return "NONZERO_DIAGONAL";
    case ErrorCode::kOutOfRange:
      return "OUT_OF_RANGE";
    case ErrorCode::kMalformedOrder:
      return "MALFORMED_ORDER";
    case ErrorCode::kMalformedRanks:
      return "MALFORMED_RANKS";
    case ErrorCode::kElementOutOfRange:
      return "ELEMENT_OUT_OF_RANGE";
    case ErrorCode::kDimensionMismatch:
      return "DIMENSION_MISMATCH";
    case ErrorCode::kNotLinearOrderProfile:
      return "NOT_LINEAR_ORDER_PROFILE";
    case ErrorCode::kNotWeakOrderProfile:
      return "NOT_WEAK_ORDER_PROFILE";
    case ErrorCode::kNotSingleRelation:
      return "NOT_SINGLE_RELATION";
    case ErrorCode::kInvalidArgument:
      return "INVALID_ARGUMENT";
    case ErrorCode::kDomainViolation:
      return "DOMAIN_VIOLATION";
    case ErrorCode::kNotConverged:
      return "NOT_CONVERGED";
    case ErrorCode::kSingularSystem:
      return "SINGULAR_SYSTEM";
    case ErrorCode::kFordConditionViolated:
      return "FORD_CONDITION";
    case ErrorCode::kPositivityLost:
      return "POSITIVITY_LOST";
    case ErrorCode::kCardinalityMismatch:
      return "CARDINALITY_MISMATCH";
    case ErrorCode::kUnsupportedAxiomForProcedure:
      return "UNSUPPORTED_AXIOM";
    case ErrorCode::kNotParetian:
      return "NOT_PARETIAN";
    case ErrorCode::kTooLarge:
      return "TOO_LARGE";
    case ErrorCode::kProtocolError:
      return "PROTOCOL_ERROR";
    case ErrorCode::kParseError:
      return "PARSE_ERROR";
    case ErrorCode::kIoError:
      return "IO_ERROR";
  }
  return "UNKNOWN";
}

bool IsSolverFailure(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotConverged:
    case ErrorCode::kSingularSystem:
    case ErrorCode::kFordConditionViolated:
    case ErrorCode::kPositivityLost:
      return true;
    default:
      return false;
  }
}

}  // namespace ranklab
