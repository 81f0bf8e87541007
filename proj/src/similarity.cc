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

#include "termforge/similarity.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "termforge/error.h"
#include "termforge/text.h"

namespace termforge {

void SimilarityWeights::validate() const {
  if (jaccard < 0 || edit < 0 || std::abs(jaccard + edit - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidConfig, "similarity weights must be non-negative and sum to 1");
  }
}

size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<size_t> row(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diagonal = row[0];
    row[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      size_t above = row[j];
      size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({above + 1, row[j - 1] + 1, diagonal + cost});
      diagonal = above;
    }
  }
  return row[b.size()];
}

double token_jaccard(const NormalizedString &a, const NormalizedString &b) {
  // Tokens are sorted, so a merge walk over the unique values suffices.
  size_t shared = 0;
  size_t total = 0;
  auto i = a.tokens.begin();
  auto j = b.tokens.begin();
  auto skip = [](auto &it, auto end) {
    auto value = it;
    while (it != end && *it == *value) ++it;
  };
  while (i != a.tokens.end() || j != b.tokens.end()) {
    ++total;
    if (j == b.tokens.end() || (i != a.tokens.end() && *i < *j)) {
      skip(i, a.tokens.end());
    } else if (i == a.tokens.end() || *j < *i) {
      skip(j, b.tokens.end());
    } else {
      ++shared;
      skip(i, a.tokens.end());
      skip(j, b.tokens.end());
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(shared) / static_cast<double>(total);
}

double similarity(const NormalizedString &a, const NormalizedString &b, const SimilarityWeights &weights) {
  if (a.empty() && b.empty()) return 0.0;
  std::u32string left = utf8_decode(a.joined);
  std::u32string right = utf8_decode(b.joined);
  size_t longest = std::max(left.size(), right.size());
  double edit = 1.0 - static_cast<double>(levenshtein(left, right)) / static_cast<double>(longest);
  double score = weights.jaccard * token_jaccard(a, b) + weights.edit * edit;
  return std::clamp(score, 0.0, 1.0);
}

double similarity(std::string_view a, std::string_view b, const Normalizer &normalizer,
                  const SimilarityWeights &weights) {
  return similarity(normalizer.normalize(a), normalizer.normalize(b), weights);
}

}  // namespace termforge
