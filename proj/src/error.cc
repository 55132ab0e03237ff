// Copyright 2026 The magiclab Authors.
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

#include "magiclab/error.h"

namespace magiclab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kNotGraphical: return "NotGraphical";
    case ErrorCode::kNoPlanFound: return "NoPlanFound";
    case ErrorCode::kInvalidPlan: return "InvalidPlan";
    case ErrorCode::kUnsupportedParameters: return "UnsupportedParameters";
    case ErrorCode::kParityViolation: return "ParityViolation";
    case ErrorCode::kRetryLimitExceeded: return "RetryLimitExceeded";
    case ErrorCode::kNoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotFiveRegular: return "NotFiveRegular";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kMalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace magiclab
