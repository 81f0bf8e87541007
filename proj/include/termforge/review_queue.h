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

#ifndef TERMFORGE_REVIEW_QUEUE_H_
#define TERMFORGE_REVIEW_QUEUE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "termforge/identifier.h"

namespace termforge {

struct SourceTerm {
  std::string term;
  std::string tty;
  std::string language;
  std::string species;

  bool operator==(const SourceTerm &) const = default;
};

// One concept of an incoming source in concept-term form. The first term is
// the source's own name for the concept (a gene symbol, a drug name).
struct SourceConcept {
  std::string source_abbr;
  std::string code;
  std::vector<SourceTerm> terms;
  std::vector<std::string> type_labels;  // from the adapter's type mapping

  bool operator==(const SourceConcept &) const = default;
};

struct ReviewCandidate {
  Identifier mcid;
  std::string preferred_term;
  double score = 0;

  bool operator==(const ReviewCandidate &) const = default;
};

enum class DecisionKind { kChoose, kRejectAll };

struct ReviewDecision {
  DecisionKind kind = DecisionKind::kRejectAll;
  Identifier mcid;  // only for kChoose
  std::string reviewer;

  static ReviewDecision choose(Identifier mcid, std::string reviewer) {
    return {DecisionKind::kChoose, mcid, std::move(reviewer)};
  }
  static ReviewDecision reject_all(std::string reviewer) {
    return {DecisionKind::kRejectAll, {}, std::move(reviewer)};
  }
};

struct Resolution {
  DecisionKind kind = DecisionKind::kRejectAll;
  Identifier chosen;     // kChoose only
  Identifier result;     // concept that received the terms
  std::vector<Identifier> added_maids;
  std::string reviewer;
  std::string decided_at;

  bool operator==(const Resolution &) const = default;
};

enum class ReviewStatus { kOpen, kResolved };

struct PendingReview {
  uint32_t serial = 0;
  SourceConcept source;
  std::vector<ReviewCandidate> candidates;  // score descending, at most five
  std::string created_at;
  ReviewStatus status = ReviewStatus::kOpen;
  std::optional<Resolution> resolution;

  std::string id() const;

  bool operator==(const PendingReview &) const = default;
};

// Fuzzy-matched source concepts waiting for a curator. Pendings are created
// Open and move to Resolved exactly once; resolved entries are immutable.
class ReviewQueue {
 public:
  // Throws InvariantViolation for an empty candidate list.
  const PendingReview &enqueue(SourceConcept source, std::vector<ReviewCandidate> candidates,
                               std::string created_at);

  const PendingReview *find(const std::string &pending_id) const;

  // The Open pending parked for this source concept, if any.
  const PendingReview *find_open(const std::string &source_abbr, const std::string &code) const;

  // Marks an Open pending resolved. Throws UnknownPending, AlreadyResolved.
  void resolve(const std::string &pending_id, Resolution resolution);

  // Open pendings, oldest first.
  std::vector<const PendingReview *> open(size_t limit, size_t offset) const;

  size_t open_count() const;
  size_t resolved_count() const;
  size_t total() const { return pendings_.size(); }
  std::map<std::string, size_t> decisions_by_reviewer() const;

  const std::map<uint32_t, PendingReview> &pendings() const { return pendings_; }

  nlohmann::json to_json() const;
  static ReviewQueue from_json(const nlohmann::json &doc);

  bool operator==(const ReviewQueue &) const = default;

 private:
  uint32_t next_serial_ = 1;
  std::map<uint32_t, PendingReview> pendings_;
};

}  // namespace termforge

#endif  // TERMFORGE_REVIEW_QUEUE_H_
