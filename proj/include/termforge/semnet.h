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

#ifndef TERMFORGE_SEMNET_H_
#define TERMFORGE_SEMNET_H_

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "termforge/identifier.h"
#include "termforge/vocabulary.h"

namespace termforge {

struct SemanticTypeNode {
  Identifier mtid{IdKind::kType, 0};
  std::string label;
  std::string source_of_label;  // source abbreviation or "PMV"
  std::set<Identifier> parents;  // Subclass_of targets

  bool operator==(const SemanticTypeNode &) const = default;
};

inline constexpr std::string_view kRootLabel = "Semantic Type";
inline constexpr std::string_view kOwnSource = "PMV";

// The ten top types in minting order.
const std::array<std::string_view, 10> &top_type_labels();

// The same ten labels in coverage report row order.
const std::array<std::string_view, 10> &report_row_labels();

// Rooted Subclass_of DAG. The root and the ten top types directly beneath it
// are fixed; everything deeper is data.
class SemanticNetwork {
 public:
  // Creates the root and the ten top types, minting MTIDs from `counters`.
  // Throws AlreadyInitialized.
  void init_top_level(IdCounters &counters);
  bool initialized() const { return root_.has_value(); }

  // Throws UnknownParent for a missing parent, InvalidParent for an empty
  // parent set or the root as a parent.
  Identifier add_subtype(IdCounters &counters, const std::string &label,
                         const std::set<Identifier> &parents, const std::string &source_of_label);

  // Replaces the parent set of a non-fixed node. Throws ImmutableNode for
  // the root and top types, CycleDetected if a new parent lies beneath
  // `mtid`, plus the add_subtype parent errors.
  void reparent(Identifier mtid, const std::set<Identifier> &new_parents);

  // Reflexive-transitive Subclass_of: true iff a == b or a reaches b.
  // Throws UnknownType.
  bool is_descendant(Identifier a, Identifier b) const;

  // All nodes reachable from `mtid` through parents, itself included.
  std::set<Identifier> ancestors(Identifier mtid) const;

  // Label lookup, ASCII case-insensitive, also accepting the prose variants
  // of the top labels ("biological function", "phenotype", ...). On a
  // shared label the lowest MTID wins.
  std::optional<Identifier> find_by_label(std::string_view label) const;

  const SemanticTypeNode *find(Identifier mtid) const;
  const SemanticTypeNode &at(Identifier mtid) const;  // throws UnknownType

  Identifier root() const;                                      // throws NotInitialized
  const std::vector<Identifier> &top_types() const { return tops_; }  // minting order
  bool is_fixed(Identifier mtid) const;

  const std::map<uint32_t, SemanticTypeNode> &nodes() const { return nodes_; }

  // Rebuilds a hierarchy from persisted nodes. Identifies the root (the
  // single parentless node) and the top types, then runs check_invariants.
  // Throws InvariantViolation or DanglingReference.
  static SemanticNetwork restore(const std::vector<SemanticTypeNode> &nodes);

  // Acyclicity, single root, reachability of the root, fixed top level.
  std::vector<std::string> check_invariants() const;

  bool operator==(const SemanticNetwork &) const = default;

 private:
  void check_parents(const std::set<Identifier> &parents) const;

  std::map<uint32_t, SemanticTypeNode> nodes_;
  std::optional<Identifier> root_;
  std::vector<Identifier> tops_;
};

struct CoverageRow {
  std::string label;
  Identifier mtid{IdKind::kType, 0};
  size_t count = 0;

  bool operator==(const CoverageRow &) const = default;
};

struct CoverageReport {
  std::vector<CoverageRow> rows;  // report_row_labels() order
  size_t untyped = 0;
};

// Per top type, the number of distinct concepts with at least one type link
// beneath it. A concept under several top types counts once in each.
CoverageReport coverage_report(const Vocabulary &vocab, const SemanticNetwork &hierarchy);

}  // namespace termforge

#endif  // TERMFORGE_SEMNET_H_
