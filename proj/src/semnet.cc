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

#include "termforge/semnet.h"

#include <algorithm>
#include <unordered_map>

#include "termforge/error.h"

namespace termforge {
namespace {

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Prose spellings of the top labels.
const std::map<std::string, std::string_view> &label_synonyms() {
  static const std::map<std::string, std::string_view> synonyms = {
      {"phenotype", "Phenotypic Abnormality"},
      {"biomedical pathway", "Biochemical Pathway"},
      {"biological function", "Biologic Function"},
  };
  return synonyms;
}

}  // namespace

const std::array<std::string_view, 10> &top_type_labels() {
  static const std::array<std::string_view, 10> labels = {
      "Anatomical Structure", "Gene",    "Gene Product",           "Mutation",
      "Cell",                 "Disease", "Phenotypic Abnormality", "Biochemical Pathway",
      "Biologic Function",    "Chemical and Drug"};
  return labels;
}

const std::array<std::string_view, 10> &report_row_labels() {
  static const std::array<std::string_view, 10> labels = {
      "Anatomical Structure", "Phenotypic Abnormality", "Biochemical Pathway", "Cell",
      "Biologic Function",    "Chemical and Drug",      "Disease",             "Gene",
      "Mutation",             "Gene Product"};
  return labels;
}

void SemanticNetwork::init_top_level(IdCounters &counters) {
  if (initialized() || !nodes_.empty()) throw Error(ErrorCode::kAlreadyInitialized, "hierarchy already exists");
  Identifier root = counters.mint(IdKind::kType);
  nodes_[root.serial] = {root, std::string(kRootLabel), std::string(kOwnSource), {}};
  root_ = root;
  for (std::string_view label : top_type_labels()) {
    Identifier mtid = counters.mint(IdKind::kType);
    nodes_[mtid.serial] = {mtid, std::string(label), std::string(kOwnSource), {root}};
    tops_.push_back(mtid);
  }
}

void SemanticNetwork::check_parents(const std::set<Identifier> &parents) const {
  if (!initialized()) throw Error(ErrorCode::kNotInitialized, "hierarchy not initialized");
  if (parents.empty()) throw Error(ErrorCode::kInvalidParent, "a type needs at least one parent");
  for (Identifier parent : parents) {
    if (find(parent) == nullptr) throw Error(ErrorCode::kUnknownParent, parent.str());
    if (parent == *root_) {
      throw Error(ErrorCode::kInvalidParent, "only the ten top types may sit directly under the root");
    }
  }
}

Identifier SemanticNetwork::add_subtype(IdCounters &counters, const std::string &label,
                                        const std::set<Identifier> &parents,
                                        const std::string &source_of_label) {
  check_parents(parents);
  if (label.empty()) throw Error(ErrorCode::kInvalidConfig, "type label is empty");
  Identifier mtid = counters.mint(IdKind::kType);
  nodes_[mtid.serial] = {mtid, label, source_of_label, parents};
  return mtid;
}

void SemanticNetwork::reparent(Identifier mtid, const std::set<Identifier> &new_parents) {
  const SemanticTypeNode &node = at(mtid);
  if (is_fixed(node.mtid)) throw Error(ErrorCode::kImmutableNode, mtid.str() + " is fixed");
  check_parents(new_parents);
  for (Identifier parent : new_parents) {
    if (is_descendant(parent, mtid)) {
      throw Error(ErrorCode::kCycleDetected, parent.str() + " lies beneath " + mtid.str());
    }
  }
  nodes_[mtid.serial].parents = new_parents;
}

bool SemanticNetwork::is_descendant(Identifier a, Identifier b) const {
  at(a);
  at(b);
  if (a == b) return true;
  std::vector<Identifier> stack = {a};
  std::set<Identifier> seen = {a};
  while (!stack.empty()) {
    Identifier current = stack.back();
    stack.pop_back();
    for (Identifier parent : nodes_.at(current.serial).parents) {
      if (parent == b) return true;
      if (seen.insert(parent).second) stack.push_back(parent);
    }
  }
  return false;
}

std::set<Identifier> SemanticNetwork::ancestors(Identifier mtid) const {
  at(mtid);
  std::set<Identifier> seen = {mtid};
  std::vector<Identifier> stack = {mtid};
  while (!stack.empty()) {
    Identifier current = stack.back();
    stack.pop_back();
    for (Identifier parent : nodes_.at(current.serial).parents) {
      if (seen.insert(parent).second) stack.push_back(parent);
    }
  }
  return seen;
}

std::optional<Identifier> SemanticNetwork::find_by_label(std::string_view label) const {
  std::string wanted = ascii_lower(label);
  if (auto it = label_synonyms().find(wanted); it != label_synonyms().end()) {
    wanted = ascii_lower(it->second);
  }
  for (const auto &[serial, node] : nodes_) {
    if (ascii_lower(node.label) == wanted) return node.mtid;
  }
  return std::nullopt;
}

const SemanticTypeNode *SemanticNetwork::find(Identifier mtid) const {
  if (mtid.kind != IdKind::kType) return nullptr;
  auto it = nodes_.find(mtid.serial);
  return it == nodes_.end() ? nullptr : &it->second;
}

const SemanticTypeNode &SemanticNetwork::at(Identifier mtid) const {
  const SemanticTypeNode *node = find(mtid);
  if (node == nullptr) throw Error(ErrorCode::kUnknownType, mtid.str());
  return *node;
}

Identifier SemanticNetwork::root() const {
  if (!root_) throw Error(ErrorCode::kNotInitialized, "hierarchy not initialized");
  return *root_;
}

bool SemanticNetwork::is_fixed(Identifier mtid) const {
  if (root_ && mtid == *root_) return true;
  return std::find(tops_.begin(), tops_.end(), mtid) != tops_.end();
}

SemanticNetwork SemanticNetwork::restore(const std::vector<SemanticTypeNode> &nodes) {
  SemanticNetwork net;
  for (const SemanticTypeNode &node : nodes) {
    if (!net.nodes_.emplace(node.mtid.serial, node).second) {
      throw Error(ErrorCode::kInvariantViolation, "duplicate type " + node.mtid.str());
    }
  }
  for (const auto &[serial, node] : net.nodes_) {
    for (Identifier parent : node.parents) {
      if (net.find(parent) == nullptr) {
        throw Error(ErrorCode::kDanglingReference, node.mtid.str() + " parent " + parent.str() + " is unknown");
      }
    }
    if (node.parents.empty()) {
      if (net.root_) throw Error(ErrorCode::kInvariantViolation, "more than one parentless type");
      net.root_ = node.mtid;
    }
  }
  if (!nodes.empty()) {
    if (!net.root_) throw Error(ErrorCode::kInvariantViolation, "no root type");
    for (std::string_view label : top_type_labels()) {
      std::optional<Identifier> found;
      for (const auto &[serial, node] : net.nodes_) {
        if (node.label == label && node.parents == std::set<Identifier>{*net.root_}) {
          found = node.mtid;
          break;
        }
      }
      if (!found) throw Error(ErrorCode::kInvariantViolation, "top type missing: " + std::string(label));
      net.tops_.push_back(*found);
    }
  }
  std::vector<std::string> problems = net.check_invariants();
  if (!problems.empty()) throw Error(ErrorCode::kInvariantViolation, problems.front());
  return net;
}

std::vector<std::string> SemanticNetwork::check_invariants() const {
  std::vector<std::string> problems;
  if (nodes_.empty()) return problems;
  if (!root_) {
    problems.push_back("no root type");
    return problems;
  }
  // Colour-marking DFS over parent edges.
  enum class Mark { kNone, kActive, kDone };
  std::unordered_map<uint32_t, Mark> marks;
  std::unordered_map<uint32_t, bool> reaches_root;
  bool cyclic = false;
  auto visit = [&](auto &&self, uint32_t serial) -> bool {
    Mark &mark = marks[serial];
    if (mark == Mark::kActive) {
      cyclic = true;
      return false;
    }
    if (mark == Mark::kDone) return reaches_root[serial];
    mark = Mark::kActive;
    bool reached = serial == root_->serial;
    for (Identifier parent : nodes_.at(serial).parents) {
      if (nodes_.count(parent.serial) == 0) continue;
      reached = self(self, parent.serial) || reached;
    }
    marks[serial] = Mark::kDone;
    reaches_root[serial] = reached;
    return reached;
  };
  for (const auto &[serial, node] : nodes_) {
    if (!visit(visit, serial)) problems.push_back(node.mtid.str() + " does not reach the root");
    for (Identifier parent : node.parents) {
      if (nodes_.count(parent.serial) == 0) problems.push_back(node.mtid.str() + " has unknown parent");
    }
  }
  if (cyclic) problems.push_back("Subclass_of cycle detected");
  if (!nodes_.at(root_->serial).parents.empty()) problems.push_back("root has parents");
  if (tops_.size() != top_type_labels().size()) problems.push_back("top level is incomplete");
  for (Identifier top : tops_) {
    if (nodes_.at(top.serial).parents != std::set<Identifier>{*root_}) {
      problems.push_back(top.str() + " is not directly under the root");
    }
  }
  return problems;
}

CoverageReport coverage_report(const Vocabulary &vocab, const SemanticNetwork &hierarchy) {
  CoverageReport report;
  std::map<Identifier, size_t> counts;
  std::map<Identifier, std::set<Identifier>> closure_cache;
  for (const auto &[serial, c] : vocab.concepts()) {
    if (c.type_links.empty()) {
      ++report.untyped;
      continue;
    }
    std::set<Identifier> reached;
    for (Identifier mtid : c.type_links) {
      if (hierarchy.find(mtid) == nullptr) continue;
      auto it = closure_cache.find(mtid);
      if (it == closure_cache.end()) it = closure_cache.emplace(mtid, hierarchy.ancestors(mtid)).first;
      reached.insert(it->second.begin(), it->second.end());
    }
    for (Identifier top : hierarchy.top_types()) {
      if (reached.count(top) != 0) ++counts[top];
    }
  }
  for (std::string_view label : report_row_labels()) {
    CoverageRow row;
    row.label = std::string(label);
    for (Identifier top : hierarchy.top_types()) {
      if (hierarchy.at(top).label == label) {
        row.mtid = top;
        row.count = counts[top];
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace termforge
