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

#ifndef TERMFORGE_SIMILARITY_H_
#define TERMFORGE_SIMILARITY_H_

#include <cstddef>
#include <string_view>

#include "termforge/normalizer.h"

namespace termforge {

// Blend weights for fuzzy similarity. Must be non-negative and sum to 1.
struct SimilarityWeights {
  double jaccard = 0.5;
  double edit = 0.5;

  // Throws InvalidConfig.
  void validate() const;
};

// Code-point edit distance (unit insert/delete/substitute).
size_t levenshtein(std::u32string_view a, std::u32string_view b);

// Jaccard index of the two token sets; 0 when both are empty.
double token_jaccard(const NormalizedString &a, const NormalizedString &b);

// weights.jaccard * Jaccard(tokens) +
// weights.edit * (1 - levenshtein(joined) / max code-point length).
// Both-empty scores 0. Symmetric and bounded in [0, 1].
double similarity(const NormalizedString &a, const NormalizedString &b,
                  const SimilarityWeights &weights = {});

double similarity(std::string_view a, std::string_view b, const Normalizer &normalizer,
                  const SimilarityWeights &weights = {});

}  // namespace termforge

#endif  // TERMFORGE_SIMILARITY_H_
