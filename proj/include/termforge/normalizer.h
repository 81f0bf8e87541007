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

#ifndef TERMFORGE_NORMALIZER_H_
#define TERMFORGE_NORMALIZER_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace termforge {

// Canonical form of a term: lowercase, punctuation-free, stop-word-free
// tokens sorted by code point.
struct NormalizedString {
  std::vector<std::string> tokens;
  std::string joined;  // tokens separated by single spaces

  bool empty() const { return tokens.empty(); }
  bool operator==(const NormalizedString &) const = default;
};

// Removes one trailing "'s" / "’s" (either case of s) or one bare trailing
// apostrophe. The token must not contain whitespace.
std::string strip_possessives(std::string_view token);

// Word-level normalization used by the norm match stage and by fuzzy
// similarity. The pipeline, applied to NFC-normalized input:
//   1. split on whitespace, strip possessives per token, rejoin
//   2. replace every punctuation or symbol character (P*, S*) with a space
//   3. split on whitespace
//   4. lowercase each word by simple case folding
//   5. drop stop words
//   6. sort words by code point
class Normalizer {
 public:
  Normalizer();
  explicit Normalizer(const std::set<std::string> &stop_words);

  // Reads a stop-word override: one token per line, '#' starts a comment.
  // The file replaces the default list. Throws IOFailure.
  static Normalizer from_stopword_file(const std::filesystem::path &path);

  static const std::set<std::string> &default_stop_words();

  NormalizedString normalize(std::string_view raw) const;

  bool is_stop_word(const std::string &folded) const { return stop_words_.count(folded) != 0; }
  const std::set<std::string> &stop_words() const { return stop_words_; }

 private:
  std::set<std::string> stop_words_;
};

}  // namespace termforge

#endif  // TERMFORGE_NORMALIZER_H_
