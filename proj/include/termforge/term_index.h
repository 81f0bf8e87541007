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

#ifndef TERMFORGE_TERM_INDEX_H_
#define TERMFORGE_TERM_INDEX_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "termforge/identifier.h"
#include "termforge/normalizer.h"
#include "termforge/vocabulary.h"

namespace termforge {

// Lookup structures for the match cascade. Postings hold concept serials and
// only ever grow: atoms are never removed from a vocabulary.
class TermIndex {
 public:
  using Postings = std::set<uint32_t>;

  explicit TermIndex(Normalizer normalizer = Normalizer()) : normalizer_(std::move(normalizer)) {}

  // Full rebuild from a vocabulary.
  static TermIndex build(const Vocabulary &vocab, Normalizer normalizer = Normalizer());

  // Incremental maintenance; call once per atom inserted into `mcid`.
  void add_atom(Identifier mcid, const Atom &atom);

  // Lookups return nullptr for a miss.
  const Postings *by_source_code(const std::string &source_abbr, const std::string &code) const;
  const Postings *by_raw(const std::string &term) const;
  const Postings *by_norm(const std::string &joined) const;
  const Postings *token_postings(const std::string &token) const;

  // Distinct normalized forms of a concept's atoms, keyed by joined form.
  const std::map<std::string, NormalizedString> *forms(uint32_t mcid_serial) const;

  const Normalizer &normalizer() const { return normalizer_; }

  // True when this index equals a from-scratch rebuild over `vocab`.
  bool consistent_with(const Vocabulary &vocab) const;

  bool operator==(const TermIndex &other) const;

 private:
  static std::string code_key(const std::string &source_abbr, const std::string &code) {
    return source_abbr + '\x1f' + code;
  }

  Normalizer normalizer_;
  std::unordered_map<std::string, Postings> by_source_code_;
  std::unordered_map<std::string, Postings> by_raw_;
  std::unordered_map<std::string, Postings> by_norm_;
  std::unordered_map<std::string, Postings> token_postings_;
  std::unordered_map<uint32_t, std::map<std::string, NormalizedString>> forms_;
};

}  // namespace termforge

#endif  // TERMFORGE_TERM_INDEX_H_
