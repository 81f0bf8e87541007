// Copyright 2026 The TermForge Authors.
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

#ifndef TERMFORGE_ERROR_H_
#define TERMFORGE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace termforge {

// Every failure the engine reports carries one of these codes. Callers that
// need to branch (the HTTP layer, the CLI) switch on the code, never on the
// message text.
enum class ErrorCode {
  kCounterExhausted,
  kMalformedIdentifier,
  kUnknownSource,
  kDuplicatePrecedence,
  kInvalidAtom,
  kUnknownConcept,
  kUnknownAtom,
  kEmptySourceConcept,
  kUnknownPending,
  kAlreadyResolved,
  kCandidateNotOffered,
  kAlreadyInitialized,
  kNotInitialized,
  kUnknownParent,
  kInvalidParent,
  kUnknownType,
  kCycleDetected,
  kImmutableNode,
  kMissingColumn,
  kEmptyFile,
  kMalformedRows,
  kInvalidConfig,
  kInvariantViolation,
  kIOFailure,
  kChecksumMismatch,
  kDanglingReference,
  kMalformedRelease,
  kStoreLocked,
};

// Stable name for a code, e.g. "AlreadyResolved".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace termforge

#endif  // TERMFORGE_ERROR_H_
