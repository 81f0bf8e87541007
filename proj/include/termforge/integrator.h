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

#ifndef TERMFORGE_INTEGRATOR_H_
#define TERMFORGE_INTEGRATOR_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "termforge/match_cascade.h"
#include "termforge/review_queue.h"
#include "termforge/semnet.h"
#include "termforge/term_index.h"
#include "termforge/vocabulary.h"

namespace termforge {

enum class OutcomeKind { kMergedInto, kNewConcept, kPendingReview };

std::string_view outcome_kind_name(OutcomeKind kind);

struct IntegrationOutcome {
  OutcomeKind kind = OutcomeKind::kNewConcept;
  Identifier mcid;         // target or newly minted concept; unset while pending
  std::string pending_id;  // kPendingReview only
  MatchStage stage = MatchStage::kNone;  // best stage over the source terms
  std::vector<Identifier> added_maids;
  size_t duplicates = 0;   // terms already present in the vocabulary
  bool conflict = false;   // exact/norm hits landed on more than one concept
  std::vector<Identifier> concepts_hit;
  std::vector<ReviewCandidate> candidates;  // kPendingReview only
  bool untyped = false;    // new concept left without a semantic type
  std::vector<std::string> unknown_type_labels;
  std::vector<std::string> events;
};

struct ConflictResolution {
  Identifier winner;
  bool conflict = false;
  std::vector<Identifier> concepts_hit;  // ascending serial
};

// Picks the merge target among per-term exact/norm results: earliest stage
// wins, then most matching terms, then lowest MCID serial. Results with
// stage Fuzzy or None are ignored. Throws InvariantViolation if no exact or
// norm hit is present.
ConflictResolution resolve_conflict(const std::vector<MatchResult> &per_term);

// Returns an ISO-8601 UTC timestamp; injectable for reproducible tests.
using Clock = std::function<std::string()>;
std::string utc_now();

// Runs one source concept at a time through the cascade and applies the
// outcome: merge into an existing concept, park for review, or mint a new
// concept. Holds references; the caller owns all state and is the single
// writer for the duration.
class Integrator {
 public:
  Integrator(Vocabulary &vocab, SemanticNetwork &hierarchy, TermIndex &index, ReviewQueue &reviews,
             CascadeParams params = {}, Clock clock = utc_now);

  // Throws EmptySourceConcept, InvalidAtom (before any mutation).
  IntegrationOutcome integrate(const SourceConcept &sc);

  // Applies a curator decision to an Open pending. Throws UnknownPending,
  // AlreadyResolved, CandidateNotOffered.
  IntegrationOutcome apply_review_decision(const std::string &pending_id, const ReviewDecision &decision);

  const MatchCascade &cascade() const { return cascade_; }

 private:
  void validate(const SourceConcept &sc) const;
  std::vector<Atom> drafts(const SourceConcept &sc) const;
  void merge_into(Identifier mcid, const SourceConcept &sc, IntegrationOutcome &outcome);
  void create_from(const SourceConcept &sc, IntegrationOutcome &outcome);
  void add_and_index(Identifier mcid, const Atom &draft, IntegrationOutcome &outcome);

  Vocabulary &vocab_;
  SemanticNetwork &hierarchy_;
  TermIndex &index_;
  ReviewQueue &reviews_;
  MatchCascade cascade_;
  Clock clock_;
};

// One JSON-lines run-log record for a processed source concept.
nlohmann::json run_log_record(const SourceConcept &sc, const IntegrationOutcome &outcome);

}  // namespace termforge

#endif  // TERMFORGE_INTEGRATOR_H_
