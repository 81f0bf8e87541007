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

#ifndef TERMFORGE_MATCH_CASCADE_H_
#define TERMFORGE_MATCH_CASCADE_H_

#include <atomic>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "termforge/identifier.h"
#include "termforge/similarity.h"
#include "termforge/term_index.h"
#include "termforge/vocabulary.h"

namespace termforge {

enum class MatchStage { kExact, kNorm, kFuzzy, kNone };

std::string_view match_stage_name(MatchStage stage);

struct ScoredConcept {
  Identifier mcid;
  double score = 0;

  bool operator==(const ScoredConcept &) const = default;
};

// Exact and norm hits carry score 1.0 and are ordered by MCID serial. Fuzzy
// candidates are ordered by score descending, then MCID serial, at most
// top_k of them.
struct MatchResult {
  MatchStage stage = MatchStage::kNone;
  std::vector<ScoredConcept> candidates;
  std::string query_term;
};

struct CascadeParams {
  double theta = 0.6;
  size_t top_k = 5;
  SimilarityWeights weights;

  // Throws InvalidConfig.
  void validate() const;
};

struct CascadeCounts {
  uint64_t exact = 0;
  uint64_t norm = 0;
  uint64_t fuzzy = 0;
};

// Exact, norm and fuzzy strategies tried in turn against a TermIndex. The
// index must not be mutated while a cascade is evaluating; distinct atoms may
// be matched concurrently against the same frozen index.
class MatchCascade {
 public:
  MatchCascade(const TermIndex &index, CascadeParams params);

  // (source, code) lookup first, then byte-exact term string.
  MatchResult exact_match(const Atom &atom) const;

  // Normalized-string equality. An empty normalized form never matches.
  MatchResult norm_match(const Atom &atom) const;

  // Candidates are concepts sharing at least one normalized token with the
  // query; each is scored by its best-matching atom and kept when the score
  // reaches theta.
  MatchResult fuzzy_match(const Atom &atom) const;

  // First stage with a result wins; later stages are not evaluated.
  MatchResult run(const Atom &atom) const;

  // Number of times each stage was evaluated.
  CascadeCounts counts() const;
  void reset_counts();

  const CascadeParams &params() const { return params_; }

 private:
  const TermIndex &index_;
  CascadeParams params_;
  mutable std::atomic<uint64_t> exact_calls_{0};
  mutable std::atomic<uint64_t> norm_calls_{0};
  mutable std::atomic<uint64_t> fuzzy_calls_{0};
};

}  // namespace termforge

#endif  // TERMFORGE_MATCH_CASCADE_H_
