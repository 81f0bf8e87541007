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

#include "termforge/integrator.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <map>
#include <set>

#include "termforge/error.h"
#include "termforge/text.h"

namespace termforge {

std::string_view outcome_kind_name(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kMergedInto: return "merged_into";
    case OutcomeKind::kNewConcept: return "new_concept";
    case OutcomeKind::kPendingReview: return "pending_review";
  }
  return "unknown";
}

std::string utc_now() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ConflictResolution resolve_conflict(const std::vector<MatchResult> &per_term) {
  struct Tally {
    MatchStage best = MatchStage::kNone;
    size_t terms = 0;
  };
  std::map<uint32_t, Tally> tallies;
  for (const MatchResult &result : per_term) {
    if (result.stage != MatchStage::kExact && result.stage != MatchStage::kNorm) continue;
    for (const ScoredConcept &hit : result.candidates) {
      Tally &tally = tallies[hit.mcid.serial];
      tally.best = std::min(tally.best, result.stage);
      ++tally.terms;
    }
  }
  if (tallies.empty()) throw Error(ErrorCode::kInvariantViolation, "resolve_conflict without exact/norm hits");

  ConflictResolution out;
  const std::pair<const uint32_t, Tally> *winner = nullptr;
  for (const auto &entry : tallies) {
    out.concepts_hit.push_back(concept_id(entry.first));
    if (winner == nullptr) {
      winner = &entry;
      continue;
    }
    const Tally &a = entry.second;
    const Tally &b = winner->second;
    // Map order already gives the lowest serial on a full tie.
    if (a.best < b.best || (a.best == b.best && a.terms > b.terms)) winner = &entry;
  }
  out.winner = concept_id(winner->first);
  out.conflict = tallies.size() > 1;
  return out;
}

Integrator::Integrator(Vocabulary &vocab, SemanticNetwork &hierarchy, TermIndex &index, ReviewQueue &reviews,
                       CascadeParams params, Clock clock)
    : vocab_(vocab),
      hierarchy_(hierarchy),
      index_(index),
      reviews_(reviews),
      cascade_(index, params),
      clock_(std::move(clock)) {}

void Integrator::validate(const SourceConcept &sc) const {
  if (sc.terms.empty()) throw Error(ErrorCode::kEmptySourceConcept, sc.source_abbr + " " + sc.code);
  vocab_.registry().at(sc.source_abbr);
  for (const SourceTerm &t : sc.terms) {
    if (trim(t.term).empty()) throw Error(ErrorCode::kInvalidAtom, "blank term in " + sc.code);
    if (t.tty.empty()) throw Error(ErrorCode::kInvalidAtom, "empty TTY for '" + t.term + "' in " + sc.code);
  }
}

std::vector<Atom> Integrator::drafts(const SourceConcept &sc) const {
  std::vector<Atom> out;
  out.reserve(sc.terms.size());
  for (const SourceTerm &t : sc.terms) {
    Atom atom;
    atom.term = t.term;
    atom.source_abbr = sc.source_abbr;
    atom.code = sc.code;
    atom.tty = t.tty;
    atom.language = t.language;
    atom.species = t.species;
    out.push_back(std::move(atom));
  }
  return out;
}

void Integrator::add_and_index(Identifier mcid, const Atom &draft, IntegrationOutcome &outcome) {
  AddAtomResult added = vocab_.add_atom(mcid, draft);
  if (added.status == AddAtomStatus::kDuplicate) {
    ++outcome.duplicates;
    if (added.owner != mcid) {
      outcome.events.push_back("duplicate_elsewhere:" + added.maid.str() + "@" + added.owner.str());
    }
    return;
  }
  index_.add_atom(mcid, vocab_.atom_at(added.maid));
  outcome.added_maids.push_back(added.maid);
}

void Integrator::merge_into(Identifier mcid, const SourceConcept &sc, IntegrationOutcome &outcome) {
  outcome.kind = OutcomeKind::kMergedInto;
  outcome.mcid = mcid;
  for (const Atom &draft : drafts(sc)) add_and_index(mcid, draft, outcome);
}

void Integrator::create_from(const SourceConcept &sc, IntegrationOutcome &outcome) {
  std::vector<Atom> all = drafts(sc);
  auto first_new = std::find_if(all.begin(), all.end(),
                                [&](const Atom &a) { return !vocab_.find_atom(atom_key(a)).has_value(); });
  if (first_new == all.end()) {
    // Every term is already present (possible when a pending is rejected after
    // the same terms arrived by another route): fold into their concept.
    Identifier owner = *vocab_.owner_of(*vocab_.find_atom(atom_key(all.front())));
    outcome.events.push_back("all_terms_present");
    merge_into(owner, sc, outcome);
    return;
  }

  outcome.kind = OutcomeKind::kNewConcept;
  outcome.duplicates += static_cast<size_t>(first_new - all.begin());
  outcome.mcid = vocab_.create_concept(*first_new);
  Identifier maid = vocab_.concept_at(outcome.mcid).atoms.front();
  index_.add_atom(outcome.mcid, vocab_.atom_at(maid));
  outcome.added_maids.push_back(maid);
  for (auto it = first_new + 1; it != all.end(); ++it) add_and_index(outcome.mcid, *it, outcome);

  for (const std::string &label : sc.type_labels) {
    if (std::optional<Identifier> mtid = hierarchy_.find_by_label(label)) {
      vocab_.link_type(outcome.mcid, *mtid);
    } else {
      outcome.unknown_type_labels.push_back(label);
    }
  }
  outcome.untyped = vocab_.concept_at(outcome.mcid).type_links.empty();
  if (outcome.untyped) outcome.events.push_back("untyped_concept");
}

IntegrationOutcome Integrator::integrate(const SourceConcept &sc) {
  validate(sc);
  IntegrationOutcome outcome;

  std::vector<MatchResult> per_term;
  bool has_direct = false;
  for (const Atom &draft : drafts(sc)) {
    MatchResult result = cascade_.run(draft);
    outcome.stage = std::min(outcome.stage, result.stage);
    has_direct = has_direct || result.stage == MatchStage::kExact || result.stage == MatchStage::kNorm;
    per_term.push_back(std::move(result));
  }

  if (has_direct) {
    ConflictResolution resolved = resolve_conflict(per_term);
    outcome.conflict = resolved.conflict;
    outcome.concepts_hit = resolved.concepts_hit;
    if (resolved.conflict) outcome.events.push_back("conflict");
    merge_into(resolved.winner, sc, outcome);
    return outcome;
  }

  if (outcome.stage == MatchStage::kFuzzy) {
    if (const PendingReview *parked = reviews_.find_open(sc.source_abbr, sc.code)) {
      // Re-ingesting a concept that is still under review parks nothing new.
      outcome.kind = OutcomeKind::kPendingReview;
      outcome.pending_id = parked->id();
      outcome.candidates = parked->candidates;
      outcome.events.push_back("already_pending");
      return outcome;
    }
    std::map<uint32_t, double> best;
    for (const MatchResult &result : per_term) {
      for (const ScoredConcept &c : result.candidates) {
        double &score = best[c.mcid.serial];
        score = std::max(score, c.score);
      }
    }
    std::vector<ScoredConcept> ranked;
    for (const auto &[serial, score] : best) ranked.push_back({concept_id(serial), score});
    std::sort(ranked.begin(), ranked.end(), [](const ScoredConcept &a, const ScoredConcept &b) {
      if (a.score != b.score) return a.score > b.score;
      return a.mcid.serial < b.mcid.serial;
    });
    if (ranked.size() > cascade_.params().top_k) ranked.resize(cascade_.params().top_k);
    for (const ScoredConcept &c : ranked) {
      outcome.candidates.push_back({c.mcid, vocab_.preferred_atom(vocab_.concept_at(c.mcid)).term, c.score});
    }
    const PendingReview &pending = reviews_.enqueue(sc, outcome.candidates, clock_());
    outcome.kind = OutcomeKind::kPendingReview;
    outcome.pending_id = pending.id();
    return outcome;
  }

  create_from(sc, outcome);
  return outcome;
}

IntegrationOutcome Integrator::apply_review_decision(const std::string &pending_id, const ReviewDecision &decision) {
  const PendingReview *pending = reviews_.find(pending_id);
  if (pending == nullptr) throw Error(ErrorCode::kUnknownPending, pending_id);
  if (pending->status != ReviewStatus::kOpen) throw Error(ErrorCode::kAlreadyResolved, pending_id);
  if (decision.kind == DecisionKind::kChoose) {
    bool offered = std::any_of(pending->candidates.begin(), pending->candidates.end(),
                               [&](const ReviewCandidate &c) { return c.mcid == decision.mcid; });
    if (!offered) throw Error(ErrorCode::kCandidateNotOffered, decision.mcid.str() + " for " + pending_id);
  }
  validate(pending->source);

  IntegrationOutcome outcome;
  outcome.stage = MatchStage::kFuzzy;
  outcome.pending_id = pending_id;
  if (decision.kind == DecisionKind::kChoose) {
    merge_into(decision.mcid, pending->source, outcome);
  } else {
    create_from(pending->source, outcome);
  }

  Resolution resolution;
  resolution.kind = decision.kind;
  resolution.chosen = decision.mcid;
  resolution.result = outcome.mcid;
  resolution.added_maids = outcome.added_maids;
  resolution.reviewer = decision.reviewer;
  resolution.decided_at = clock_();
  reviews_.resolve(pending_id, std::move(resolution));
  return outcome;
}

nlohmann::json run_log_record(const SourceConcept &sc, const IntegrationOutcome &outcome) {
  nlohmann::json added = nlohmann::json::array();
  for (Identifier maid : outcome.added_maids) added.push_back(maid.str());
  nlohmann::json hit = nlohmann::json::array();
  for (Identifier mcid : outcome.concepts_hit) hit.push_back(mcid.str());
  nlohmann::json record = {
      {"source_abbr", sc.source_abbr},
      {"code", sc.code},
      {"outcome", outcome_kind_name(outcome.kind)},
      {"stage", match_stage_name(outcome.stage)},
      {"target", outcome.kind == OutcomeKind::kPendingReview ? "" : outcome.mcid.str()},
      {"added_maids", added},
      {"duplicates", outcome.duplicates},
      {"conflict", outcome.conflict},
      {"concepts_hit", hit},
      {"untyped", outcome.untyped},
      {"events", outcome.events},
  };
  if (outcome.kind == OutcomeKind::kPendingReview) record["pending_id"] = outcome.pending_id;
  if (!outcome.unknown_type_labels.empty()) record["unknown_type_labels"] = outcome.unknown_type_labels;
  return record;
}

}  // namespace termforge
