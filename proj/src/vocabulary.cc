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

#include "termforge/vocabulary.h"

#include <algorithm>

#include "termforge/error.h"
#include "termforge/text.h"

namespace termforge {

void SourceRegistry::register_source(SourceRegistryEntry entry) {
  if (entry.source_abbr.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "source abbreviation is empty");
  }
  if (entry.precedence_rank <= 0) {
    throw Error(ErrorCode::kInvalidConfig,
                "precedence rank for " + entry.source_abbr + " must be a positive integer");
  }
  for (const auto &[tty, rank] : entry.tty_ranks) {
    if (tty.empty() || rank <= 0) {
      throw Error(ErrorCode::kInvalidConfig, "bad TTY rank entry for " + entry.source_abbr);
    }
  }
  for (const auto &[abbr, other] : entries_) {
    if (abbr != entry.source_abbr && other.precedence_rank == entry.precedence_rank) {
      throw Error(ErrorCode::kDuplicatePrecedence,
                  entry.source_abbr + " and " + abbr + " both claim rank " +
                      std::to_string(entry.precedence_rank));
    }
  }
  std::string key = entry.source_abbr;
  entries_[key] = std::move(entry);
}

const SourceRegistryEntry *SourceRegistry::find(const std::string &source_abbr) const {
  auto it = entries_.find(source_abbr);
  return it == entries_.end() ? nullptr : &it->second;
}

const SourceRegistryEntry &SourceRegistry::at(const std::string &source_abbr) const {
  const SourceRegistryEntry *entry = find(source_abbr);
  if (entry == nullptr) throw Error(ErrorCode::kUnknownSource, "source not registered: " + source_abbr);
  return *entry;
}

namespace {

struct PreferenceKey {
  int source_rank;
  int tty_rank;
  size_t length;
  const std::string *term;
  uint32_t serial;

  bool operator<(const PreferenceKey &o) const {
    if (source_rank != o.source_rank) return source_rank < o.source_rank;
    if (tty_rank != o.tty_rank) return tty_rank < o.tty_rank;
    if (length != o.length) return length < o.length;
    if (*term != *o.term) return *term < *o.term;
    return serial < o.serial;
  }
};

PreferenceKey preference_key(const Atom &atom, const SourceRegistry &registry) {
  const SourceRegistryEntry &source = registry.at(atom.source_abbr);
  return {source.precedence_rank, source.tty_rank(atom.tty), utf8_length(atom.term), &atom.term,
          atom.maid.serial};
}

}  // namespace

Identifier select_preferred_term(std::span<const Atom *const> atoms, const SourceRegistry &registry) {
  if (atoms.empty()) throw Error(ErrorCode::kInvariantViolation, "concept without atoms");
  const Atom *best = atoms.front();
  PreferenceKey best_key = preference_key(*best, registry);
  for (const Atom *atom : atoms.subspan(1)) {
    PreferenceKey key = preference_key(*atom, registry);
    if (key < best_key) {
      best = atom;
      best_key = key;
    }
  }
  return best->maid;
}

void Vocabulary::validate_draft(const Atom &draft) const {
  if (trim(draft.term).empty()) throw Error(ErrorCode::kInvalidAtom, "term string is blank");
  if (draft.tty.empty()) throw Error(ErrorCode::kInvalidAtom, "TTY is empty for '" + draft.term + "'");
  registry_.at(draft.source_abbr);
}

Identifier Vocabulary::insert_atom(Identifier mcid, const Atom &draft) {
  Atom atom = draft;
  atom.maid = counters_.mint(IdKind::kAtom);
  keys_.emplace(atom_key(atom), atom.maid.serial);
  owner_.emplace(atom.maid.serial, mcid.serial);
  Identifier maid = atom.maid;
  atoms_.emplace(maid.serial, std::move(atom));
  return maid;
}

Identifier Vocabulary::create_concept(const Atom &first) {
  validate_draft(first);
  if (keys_.count(atom_key(first)) != 0) {
    throw Error(ErrorCode::kInvalidAtom, "atom already present: '" + first.term + "'");
  }
  Concept c;
  c.mcid = counters_.mint(IdKind::kConcept);
  Identifier maid = insert_atom(c.mcid, first);
  c.atoms.push_back(maid);
  c.preferred = maid;
  Identifier mcid = c.mcid;
  concepts_.emplace(mcid.serial, std::move(c));
  return mcid;
}

AddAtomResult Vocabulary::add_atom(Identifier mcid, const Atom &draft) {
  auto it = concepts_.find(mcid.serial);
  if (mcid.kind != IdKind::kConcept || it == concepts_.end()) {
    throw Error(ErrorCode::kUnknownConcept, mcid.str());
  }
  validate_draft(draft);
  auto existing = keys_.find(atom_key(draft));
  if (existing != keys_.end()) {
    return {AddAtomStatus::kDuplicate, atom_id(existing->second), concept_id(owner_.at(existing->second))};
  }
  Concept &c = it->second;
  Identifier maid = insert_atom(mcid, draft);
  c.atoms.push_back(maid);
  c.preferred = select_preferred_term(c);
  return {AddAtomStatus::kAdded, maid, mcid};
}

void Vocabulary::link_type(Identifier mcid, Identifier mtid) {
  auto it = concepts_.find(mcid.serial);
  if (mcid.kind != IdKind::kConcept || it == concepts_.end()) {
    throw Error(ErrorCode::kUnknownConcept, mcid.str());
  }
  if (mtid.kind != IdKind::kType) throw Error(ErrorCode::kUnknownType, mtid.str());
  it->second.type_links.insert(mtid);
}

void Vocabulary::restore_concept(const Concept &concept_row, const std::vector<Atom> &atoms) {
  if (concepts_.count(concept_row.mcid.serial) != 0) {
    throw Error(ErrorCode::kInvariantViolation, "duplicate concept " + concept_row.mcid.str());
  }
  if (atoms.empty()) throw Error(ErrorCode::kInvariantViolation, concept_row.mcid.str() + " has no atoms");
  Concept c = concept_row;
  c.atoms.clear();
  bool preferred_found = false;
  for (const Atom &atom : atoms) {
    validate_draft(atom);
    if (atoms_.count(atom.maid.serial) != 0) {
      throw Error(ErrorCode::kInvariantViolation, "duplicate atom " + atom.maid.str());
    }
    if (!keys_.emplace(atom_key(atom), atom.maid.serial).second) {
      throw Error(ErrorCode::kInvariantViolation, "duplicate atom tuple for " + atom.maid.str());
    }
    atoms_.emplace(atom.maid.serial, atom);
    owner_.emplace(atom.maid.serial, c.mcid.serial);
    c.atoms.push_back(atom.maid);
    if (atom.maid == c.preferred) preferred_found = true;
  }
  if (!preferred_found) {
    throw Error(ErrorCode::kInvariantViolation, "preferred atom of " + c.mcid.str() + " is not one of its atoms");
  }
  concepts_.emplace(c.mcid.serial, std::move(c));
}

const Concept *Vocabulary::find_concept(Identifier mcid) const {
  if (mcid.kind != IdKind::kConcept) return nullptr;
  auto it = concepts_.find(mcid.serial);
  return it == concepts_.end() ? nullptr : &it->second;
}

const Concept &Vocabulary::concept_at(Identifier mcid) const {
  const Concept *c = find_concept(mcid);
  if (c == nullptr) throw Error(ErrorCode::kUnknownConcept, mcid.str());
  return *c;
}

const Atom &Vocabulary::atom_at(Identifier maid) const {
  auto it = atoms_.find(maid.serial);
  if (maid.kind != IdKind::kAtom || it == atoms_.end()) throw Error(ErrorCode::kUnknownAtom, maid.str());
  return it->second;
}

std::optional<Identifier> Vocabulary::owner_of(Identifier maid) const {
  auto it = owner_.find(maid.serial);
  if (it == owner_.end()) return std::nullopt;
  return concept_id(it->second);
}

std::optional<Identifier> Vocabulary::find_atom(const AtomKey &key) const {
  auto it = keys_.find(key);
  if (it == keys_.end()) return std::nullopt;
  return atom_id(it->second);
}

std::vector<const Atom *> Vocabulary::atoms_of(const Concept &c) const {
  std::vector<const Atom *> out;
  out.reserve(c.atoms.size());
  for (Identifier maid : c.atoms) out.push_back(&atom_at(maid));
  return out;
}

Identifier Vocabulary::select_preferred_term(const Concept &c) const {
  std::vector<const Atom *> atoms = atoms_of(c);
  return termforge::select_preferred_term(atoms, registry_);
}

std::vector<std::string> Vocabulary::check_invariants() const {
  std::vector<std::string> problems;
  size_t owned = 0;
  uint32_t max_concept = 0;
  uint32_t max_atom = 0;
  for (const auto &[serial, c] : concepts_) {
    max_concept = std::max(max_concept, serial);
    if (c.atoms.empty()) problems.push_back(c.mcid.str() + " has no atoms");
    if (std::find(c.atoms.begin(), c.atoms.end(), c.preferred) == c.atoms.end()) {
      problems.push_back(c.mcid.str() + " preferred atom is not a member");
    }
    for (Identifier maid : c.atoms) {
      ++owned;
      auto owner = owner_.find(maid.serial);
      if (atoms_.count(maid.serial) == 0 || owner == owner_.end() || owner->second != serial) {
        problems.push_back(maid.str() + " ownership is inconsistent");
      }
    }
  }
  if (owned != atoms_.size()) problems.push_back("atom count does not match concept membership");
  std::set<AtomKey> seen;
  for (const auto &[serial, atom] : atoms_) {
    max_atom = std::max(max_atom, serial);
    if (!seen.insert(atom_key(atom)).second) problems.push_back(atom.maid.str() + " duplicates a tuple");
    if (registry_.find(atom.source_abbr) == nullptr) {
      problems.push_back(atom.maid.str() + " has unregistered source " + atom.source_abbr);
    }
  }
  if (!concepts_.empty() && counters_.next(IdKind::kConcept) <= max_concept) {
    problems.push_back("concept counter is not ahead of existing serials");
  }
  if (!atoms_.empty() && counters_.next(IdKind::kAtom) <= max_atom) {
    problems.push_back("atom counter is not ahead of existing serials");
  }
  return problems;
}

}  // namespace termforge
