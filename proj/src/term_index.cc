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

#include "termforge/term_index.h"

namespace termforge {
namespace {

const TermIndex::Postings *find_postings(const std::unordered_map<std::string, TermIndex::Postings> &map,
                                         const std::string &key) {
  auto it = map.find(key);
  return it == map.end() ? nullptr : &it->second;
}

}  // namespace

TermIndex TermIndex::build(const Vocabulary &vocab, Normalizer normalizer) {
  TermIndex index(std::move(normalizer));
  for (const auto &[serial, atom] : vocab.atoms()) {
    index.add_atom(*vocab.owner_of(atom.maid), atom);
  }
  return index;
}

void TermIndex::add_atom(Identifier mcid, const Atom &atom) {
  uint32_t serial = mcid.serial;
  by_source_code_[code_key(atom.source_abbr, atom.code)].insert(serial);
  by_raw_[atom.term].insert(serial);
  NormalizedString norm = normalizer_.normalize(atom.term);
  if (norm.empty()) return;
  by_norm_[norm.joined].insert(serial);
  for (const std::string &token : norm.tokens) token_postings_[token].insert(serial);
  std::string joined = norm.joined;
  forms_[serial].emplace(std::move(joined), std::move(norm));
}

const TermIndex::Postings *TermIndex::by_source_code(const std::string &source_abbr,
                                                     const std::string &code) const {
  return find_postings(by_source_code_, code_key(source_abbr, code));
}

const TermIndex::Postings *TermIndex::by_raw(const std::string &term) const {
  return find_postings(by_raw_, term);
}

const TermIndex::Postings *TermIndex::by_norm(const std::string &joined) const {
  return find_postings(by_norm_, joined);
}

const TermIndex::Postings *TermIndex::token_postings(const std::string &token) const {
  return find_postings(token_postings_, token);
}

const std::map<std::string, NormalizedString> *TermIndex::forms(uint32_t mcid_serial) const {
  auto it = forms_.find(mcid_serial);
  return it == forms_.end() ? nullptr : &it->second;
}

bool TermIndex::consistent_with(const Vocabulary &vocab) const {
  return *this == build(vocab, normalizer_);
}

bool TermIndex::operator==(const TermIndex &other) const {
  return by_source_code_ == other.by_source_code_ && by_raw_ == other.by_raw_ &&
         by_norm_ == other.by_norm_ && token_postings_ == other.token_postings_ &&
         forms_ == other.forms_;
}

}  // namespace termforge
