// Copyright 2026 The t2t Authors
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

#include "t2t/error.h"

#include <sstream>

namespace t2t {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kDuplicatePiece: return "DuplicatePiece";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMissingSpecial: return "MissingSpecial";
    case ErrorCode::kSentinelLayout: return "SentinelLayout";
    case ErrorCode::kInvalidId: return "InvalidId";
    case ErrorCode::kShapeError: return "ShapeError";
    case ErrorCode::kEmptyVocab: return "EmptyVocab";
    case ErrorCode::kFormatError: return "FormatError";
    case ErrorCode::kTruncatedError: return "TruncatedError";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kEmptyMixture: return "EmptyMixture";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInsufficientSentinels: return "InsufficientSentinels";
    case ErrorCode::kInvalidLabel: return "InvalidLabel";
    case ErrorCode::kArityError: return "ArityError";
    case ErrorCode::kNotClassification: return "NotClassification";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kUnknownTask: return "UnknownTask";
    case ErrorCode::kUndefinedMetric: return "UndefinedMetric";
    case ErrorCode::kEmptySource: return "EmptySource";
    case ErrorCode::kNoPairs: return "NoPairs";
    case ErrorCode::kUndefinedRatio: return "UndefinedRatio";
    case ErrorCode::kObjectiveError: return "ObjectiveError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(ErrorCode::kParseError,
            "line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {
std::string objective_message(double candidate, double value) {
  std::ostringstream os;
  os << "objective returned " << value << " for candidate " << candidate;
  return os.str();
}
}  // namespace

ObjectiveError::ObjectiveError(double candidate, double value)
    : Error(ErrorCode::kObjectiveError, objective_message(candidate, value)),
      candidate_(candidate) {}

}  // namespace t2t
