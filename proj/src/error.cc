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

#include "termforge/error.h"

namespace termforge {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCounterExhausted: return "CounterExhausted";
    case ErrorCode::kMalformedIdentifier: return "MalformedIdentifier";
    case ErrorCode::kUnknownSource: return "UnknownSource";
    case ErrorCode::kDuplicatePrecedence: return "DuplicatePrecedence";
    case ErrorCode::kInvalidAtom: return "InvalidAtom";
    case ErrorCode::kUnknownConcept: return "UnknownConcept";
    case ErrorCode::kUnknownAtom: return "UnknownAtom";
    case ErrorCode::kEmptySourceConcept: return "EmptySourceConcept";
    case ErrorCode::kUnknownPending: return "UnknownPending";
    case ErrorCode::kAlreadyResolved: return "AlreadyResolved";
    case ErrorCode::kCandidateNotOffered: return "CandidateNotOffered";
    case ErrorCode::kAlreadyInitialized: return "AlreadyInitialized";
    case ErrorCode::kNotInitialized: return "NotInitialized";
    case ErrorCode::kUnknownParent: return "UnknownParent";
    case ErrorCode::kInvalidParent: return "InvalidParent";
    case ErrorCode::kUnknownType: return "UnknownType";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kImmutableNode: return "ImmutableNode";
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kEmptyFile: return "EmptyFile";
    case ErrorCode::kMalformedRows: return "MalformedRow";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kIOFailure: return "IOFailure";
    case ErrorCode::kChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::kDanglingReference: return "DanglingReference";
    case ErrorCode::kMalformedRelease: return "MalformedRelease";
    case ErrorCode::kStoreLocked: return "StoreLocked";
  }
  return "Unknown";
}

}  // namespace termforge
