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

#ifndef TERMFORGE_VOCABULARY_H_
#define TERMFORGE_VOCABULARY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "termforge/identifier.h"

namespace termforge {

// One term string as it appears in one source. When used as a draft (before
// insertion) the maid is ignored.
struct Atom {
  Identifier maid{IdKind::kAtom, 0};
  std::string term;
  std::string source_abbr;
  std::string code;      // code in source
  std::string tty;       // term type in source
  std::string language;
  std::string species;

  bool operator==(const Atom &) const = default;
};

// Uniqueness key of an atom within a vocabulary.
using AtomKey = std::tuple<std::string, std::string, std::string, std::string>;
inline AtomKey atom_key(const Atom &a) { return {a.source_abbr, a.code, a.term, a.tty}; }

struct Concept {
  Identifier mcid;
  std::vector<Identifier> atoms;  // insertion order
  Identifier preferred{IdKind::kAtom, 0};
  std::set<Identifier> type_links;

  bool operator==(const Concept &) const = default;
};

inline constexpr int kDefaultTtyRank = 1000;

struct SourceRegistryEntry {
  std::string source_abbr;
  std::string version;
  int precedence_rank = 0;  // 1 = highest
  std::map<std::string, int> tty_ranks;

  int tty_rank(const std::string &tty) const {
    auto it = tty_ranks.find(tty);
    return it == tty_ranks.end() ? kDefaultTtyRank : it->second;
  }

  bool operator==(const SourceRegistryEntry &) const = default;
};

// Operator-configured source precedence. There is no built-in ordering; every
// source must be registered before its atoms can enter a vocabulary.
class SourceRegistry {
 public:
  // Inserts or replaces the entry for entry.source_abbr. Throws
  // DuplicatePrecedence if another source already holds the same rank, and
  // InvalidConfig for a non-positive rank.
  void register_source(SourceRegistryEntry entry);

  const SourceRegistryEntry *find(const std::string &source_abbr) const;

  // Throws UnknownSource.
  const SourceRegistryEntry &at(const std::string &source_abbr) const;

  const std::map<std::string, SourceRegistryEntry> &entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  bool operator==(const SourceRegistry &) const = default;

 private:
  std::map<std::string, SourceRegistryEntry> entries_;
};

// Picks the preferred atom: lowest source precedence rank, then lowest TTY
// rank, then shortest term (code points), then smallest term bytes, then
// lowest MAID serial. The input order does not matter.
// Throws UnknownSource for an unregistered source.
Identifier select_preferred_term(std::span<const Atom *const> atoms, const SourceRegistry &registry);

enum class AddAtomStatus { kAdded, kDuplicate };

struct AddAtomResult {
  AddAtomStatus status = AddAtomStatus::kAdded;
  Identifier maid{IdKind::kAtom, 0};  // new MAID, or the existing one on duplicate
  Identifier owner;                   // concept now holding the atom
};

// The unified concept store. Not internally synchronized: one writer at a
// time, readers only while no writer is active.
class Vocabulary {
 public:
  SourceRegistry &registry() { return registry_; }
  const SourceRegistry &registry() const { return registry_; }
  IdCounters &counters() { return counters_; }
  const IdCounters &counters() const { return counters_; }

  // Mints a new concept whose first atom is `first`. Throws InvalidAtom if
  // `first` is malformed or already present anywhere in the vocabulary.
  Identifier create_concept(const Atom &first);

  // Adds a synonym to an existing concept and recomputes its preferred atom.
  // A tuple already present anywhere in the vocabulary yields kDuplicate and
  // leaves everything unchanged.
  AddAtomResult add_atom(Identifier mcid, const Atom &draft);

  void link_type(Identifier mcid, Identifier mtid);

  // Restores a concept exactly as persisted, including IDs and the stored
  // preferred atom. Used by release loading; counters are not touched.
  void restore_concept(const Concept &concept_row, const std::vector<Atom> &atoms);

  const Concept *find_concept(Identifier mcid) const;
  const Concept &concept_at(Identifier mcid) const;  // throws UnknownConcept
  const Atom &atom_at(Identifier maid) const;        // throws UnknownAtom
  std::optional<Identifier> owner_of(Identifier maid) const;
  std::optional<Identifier> find_atom(const AtomKey &key) const;

  std::vector<const Atom *> atoms_of(const Concept &c) const;
  const Atom &preferred_atom(const Concept &c) const { return atom_at(c.preferred); }

  // Recomputes the preferred atom from the registry.
  Identifier select_preferred_term(const Concept &c) const;

  const std::map<uint32_t, Concept> &concepts() const { return concepts_; }
  const std::map<uint32_t, Atom> &atoms() const { return atoms_; }
  size_t concept_count() const { return concepts_.size(); }
  size_t atom_count() const { return atoms_.size(); }

  // Full model check: preferred atom membership, atom ownership, tuple
  // uniqueness, registered sources, counters ahead of every serial. Returns
  // a description of each violation found; empty means consistent.
  std::vector<std::string> check_invariants() const;

  bool operator==(const Vocabulary &) const = default;

 private:
  void validate_draft(const Atom &draft) const;
  Identifier insert_atom(Identifier mcid, const Atom &draft);

  SourceRegistry registry_;
  IdCounters counters_;
  std::map<uint32_t, Concept> concepts_;
  std::map<uint32_t, Atom> atoms_;
  std::unordered_map<uint32_t, uint32_t> owner_;  // maid serial -> mcid serial
  std::map<AtomKey, uint32_t> keys_;              // tuple -> maid serial
};

}  // namespace termforge

#endif  // TERMFORGE_VOCABULARY_H_
