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

#include "termforge/match_cascade.h"

#include <algorithm>
#include <set>

#include "termforge/error.h"

namespace termforge {
namespace {

MatchResult hits(MatchStage stage, const TermIndex::Postings &postings, const std::string &query) {
  MatchResult result{stage, {}, query};
  for (uint32_t serial : postings) result.candidates.push_back({concept_id(serial), 1.0});
  return result;
}

}  // namespace

std::string_view match_stage_name(MatchStage stage) {
  switch (stage) {
    case MatchStage::kExact: return "exact";
    case MatchStage::kNorm: return "norm";
    case MatchStage::kFuzzy: return "fuzzy";
    case MatchStage::kNone: return "none";
  }
  return "none";
}

void CascadeParams::validate() const {
  if (!(theta >= 0.0 && theta <= 1.0)) throw Error(ErrorCode::kInvalidConfig, "theta must lie in [0, 1]");
  if (top_k == 0) throw Error(ErrorCode::kInvalidConfig, "top_k must be positive");
  weights.validate();
}

MatchCascade::MatchCascade(const TermIndex &index, CascadeParams params)
    : index_(index), params_(params) {
  params_.validate();
}

MatchResult MatchCascade::exact_match(const Atom &atom) const {
  ++exact_calls_;
  if (const auto *postings = index_.by_source_code(atom.source_abbr, atom.code)) {
    return hits(MatchStage::kExact, *postings, atom.term);
  }
  if (const auto *postings = index_.by_raw(atom.term)) {
    return hits(MatchStage::kExact, *postings, atom.term);
  }
  return {MatchStage::kNone, {}, atom.term};
}

MatchResult MatchCascade::norm_match(const Atom &atom) const {
  ++norm_calls_;
  NormalizedString norm = index_.normalizer().normalize(atom.term);
  if (!norm.empty()) {
    if (const auto *postings = index_.by_norm(norm.joined)) {
      return hits(MatchStage::kNorm, *postings, atom.term);
    }
  }
  return {MatchStage::kNone, {}, atom.term};
}

MatchResult MatchCascade::fuzzy_match(const Atom &atom) const {
  ++fuzzy_calls_;
  MatchResult result{MatchStage::kNone, {}, atom.term};
  NormalizedString query = index_.normalizer().normalize(atom.term);
  if (query.empty()) return result;

  std::set<uint32_t> candidates;
  for (const std::string &token : query.tokens) {
    if (const auto *postings = index_.token_postings(token)) {
      candidates.insert(postings->begin(), postings->end());
    }
  }

  for (uint32_t serial : candidates) {
    const auto *forms = index_.forms(serial);
    if (forms == nullptr) continue;
    double best = 0.0;
    for (const auto &[joined, form] : *forms) {
      best = std::max(best, similarity(query, form, params_.weights));
    }
    if (best >= params_.theta) result.candidates.push_back({concept_id(serial), best});
  }

  std::sort(result.candidates.begin(), result.candidates.end(),
            [](const ScoredConcept &a, const ScoredConcept &b) {
              if (a.score != b.score) return a.score > b.score;
              return a.mcid.serial < b.mcid.serial;
            });
  if (result.candidates.size() > params_.top_k) result.candidates.resize(params_.top_k);
  if (!result.candidates.empty()) result.stage = MatchStage::kFuzzy;
  return result;
}

MatchResult MatchCascade::run(const Atom &atom) const {
  MatchResult result = exact_match(atom);
  if (result.stage != MatchStage::kNone) return result;
  result = norm_match(atom);
  if (result.stage != MatchStage::kNone) return result;
  return fuzzy_match(atom);
}

CascadeCounts MatchCascade::counts() const {
  return {exact_calls_.load(), norm_calls_.load(), fuzzy_calls_.load()};
}

void MatchCascade::reset_counts() {
  exact_calls_ = 0;
  norm_calls_ = 0;
  fuzzy_calls_ = 0;
}

}  // namespace termforge
