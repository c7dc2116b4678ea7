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

#ifndef T2T_ERROR_H_
#define T2T_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace t2t {

enum class ErrorCode {
  kInvalidArgument,
  kIoError,
  // tokenizer
  kDuplicatePiece,
  kParseError,
  kMissingSpecial,
  kSentinelLayout,
  kInvalidId,
  // vocab_transfer
  kShapeError,
  kEmptyVocab,
  kFormatError,
  kTruncatedError,
  // corruption
  kTooShort,
  kEmptyMixture,
  kInvalidConfig,
  kInsufficientSentinels,
  // tasks
  kInvalidLabel,
  kArityError,
  kNotClassification,
  kInvalidSpec,
  kUnknownTask,
  // metrics / summarization
  kUndefinedMetric,
  kEmptySource,
  kNoPairs,
  kUndefinedRatio,
  // tuning
  kObjectiveError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Malformed input at a known 1-based line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The search objective returned a non-finite value for `candidate`.
class ObjectiveError : public Error {
 public:
  ObjectiveError(double candidate, double value);

  double candidate() const noexcept { return candidate_; }

 private:
  double candidate_;
};

}  // namespace t2t

#endif  // T2T_ERROR_H_
