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

#include "termforge/review_queue.h"

#include <cstdio>

#include "termforge/error.h"

namespace termforge {
namespace {

using nlohmann::json;

json source_to_json(const SourceConcept &sc) {
  json terms = json::array();
  for (const SourceTerm &t : sc.terms) {
    terms.push_back({{"term", t.term}, {"tty", t.tty}, {"language", t.language}, {"species", t.species}});
  }
  return {{"source_abbr", sc.source_abbr}, {"code", sc.code}, {"terms", terms}, {"type_labels", sc.type_labels}};
}

SourceConcept source_from_json(const json &j) {
  SourceConcept sc;
  sc.source_abbr = j.at("source_abbr").get<std::string>();
  sc.code = j.at("code").get<std::string>();
  for (const json &t : j.at("terms")) {
    sc.terms.push_back({t.at("term").get<std::string>(), t.at("tty").get<std::string>(),
                        t.value("language", ""), t.value("species", "")});
  }
  sc.type_labels = j.value("type_labels", std::vector<std::string>{});
  return sc;
}

std::string_view decision_name(DecisionKind kind) {
  return kind == DecisionKind::kChoose ? "choose" : "reject_all";
}

}  // namespace

std::string PendingReview::id() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "PR%08u", serial);
  return buf;
}

const PendingReview &ReviewQueue::enqueue(SourceConcept source, std::vector<ReviewCandidate> candidates,
                                          std::string created_at) {
  if (candidates.empty()) throw Error(ErrorCode::kInvariantViolation, "pending review without candidates");
  PendingReview pending;
  pending.serial = next_serial_++;
  pending.source = std::move(source);
  pending.candidates = std::move(candidates);
  pending.created_at = std::move(created_at);
  return pendings_.emplace(pending.serial, std::move(pending)).first->second;
}

const PendingReview *ReviewQueue::find(const std::string &pending_id) const {
  if (pending_id.size() != 10 || pending_id.compare(0, 2, "PR") != 0) return nullptr;
  uint32_t serial = 0;
  for (char c : pending_id.substr(2)) {
    if (c < '0' || c > '9') return nullptr;
    serial = serial * 10 + static_cast<uint32_t>(c - '0');
  }
  auto it = pendings_.find(serial);
  return it == pendings_.end() ? nullptr : &it->second;
}

const PendingReview *ReviewQueue::find_open(const std::string &source_abbr, const std::string &code) const {
  for (const auto &[serial, pending] : pendings_) {
    if (pending.status == ReviewStatus::kOpen && pending.source.source_abbr == source_abbr &&
        pending.source.code == code) {
      return &pending;
    }
  }
  return nullptr;
}

void ReviewQueue::resolve(const std::string &pending_id, Resolution resolution) {
  const PendingReview *found = find(pending_id);
  if (found == nullptr) throw Error(ErrorCode::kUnknownPending, pending_id);
  PendingReview &pending = pendings_.at(found->serial);
  if (pending.status != ReviewStatus::kOpen) throw Error(ErrorCode::kAlreadyResolved, pending_id);
  pending.status = ReviewStatus::kResolved;
  pending.resolution = std::move(resolution);
}

std::vector<const PendingReview *> ReviewQueue::open(size_t limit, size_t offset) const {
  // Serials follow creation order, so map order is oldest first.
  std::vector<const PendingReview *> page;
  size_t skipped = 0;
  for (const auto &[serial, pending] : pendings_) {
    if (pending.status != ReviewStatus::kOpen) continue;
    if (skipped < offset) {
      ++skipped;
      continue;
    }
    if (page.size() >= limit) break;
    page.push_back(&pending);
  }
  return page;
}

size_t ReviewQueue::open_count() const {
  size_t n = 0;
  for (const auto &[serial, pending] : pendings_) n += pending.status == ReviewStatus::kOpen;
  return n;
}

size_t ReviewQueue::resolved_count() const { return pendings_.size() - open_count(); }

std::map<std::string, size_t> ReviewQueue::decisions_by_reviewer() const {
  std::map<std::string, size_t> counts;
  for (const auto &[serial, pending] : pendings_) {
    if (pending.resolution) ++counts[pending.resolution->reviewer];
  }
  return counts;
}

json ReviewQueue::to_json() const {
  json items = json::array();
  for (const auto &[serial, p] : pendings_) {
    json candidates = json::array();
    for (const ReviewCandidate &c : p.candidates) {
      candidates.push_back({{"mcid", c.mcid.str()}, {"preferred_term", c.preferred_term}, {"score", c.score}});
    }
    json item = {{"serial", p.serial},
                 {"source", source_to_json(p.source)},
                 {"candidates", candidates},
                 {"created_at", p.created_at},
                 {"status", p.status == ReviewStatus::kOpen ? "open" : "resolved"}};
    if (p.resolution) {
      const Resolution &r = *p.resolution;
      json added = json::array();
      for (Identifier maid : r.added_maids) added.push_back(maid.str());
      item["resolution"] = {{"decision", decision_name(r.kind)},
                            {"chosen", r.kind == DecisionKind::kChoose ? r.chosen.str() : ""},
                            {"result", r.result.str()},
                            {"added_maids", added},
                            {"reviewer", r.reviewer},
                            {"decided_at", r.decided_at}};
    }
    items.push_back(std::move(item));
  }
  return {{"next_serial", next_serial_}, {"pendings", items}};
}

ReviewQueue ReviewQueue::from_json(const json &doc) {
  ReviewQueue queue;
  try {
    queue.next_serial_ = doc.at("next_serial").get<uint32_t>();
    for (const json &item : doc.at("pendings")) {
      PendingReview p;
      p.serial = item.at("serial").get<uint32_t>();
      p.source = source_from_json(item.at("source"));
      for (const json &c : item.at("candidates")) {
        p.candidates.push_back({Identifier::parse(c.at("mcid").get<std::string>(), IdKind::kConcept),
                                c.at("preferred_term").get<std::string>(), c.at("score").get<double>()});
      }
      p.created_at = item.at("created_at").get<std::string>();
      p.status = item.at("status").get<std::string>() == "open" ? ReviewStatus::kOpen : ReviewStatus::kResolved;
      if (item.contains("resolution")) {
        const json &r = item.at("resolution");
        Resolution res;
        res.kind = r.at("decision").get<std::string>() == "choose" ? DecisionKind::kChoose : DecisionKind::kRejectAll;
        if (res.kind == DecisionKind::kChoose) {
          res.chosen = Identifier::parse(r.at("chosen").get<std::string>(), IdKind::kConcept);
        }
        res.result = Identifier::parse(r.at("result").get<std::string>(), IdKind::kConcept);
        for (const json &maid : r.at("added_maids")) {
          res.added_maids.push_back(Identifier::parse(maid.get<std::string>(), IdKind::kAtom));
        }
        res.reviewer = r.at("reviewer").get<std::string>();
        res.decided_at = r.at("decided_at").get<std::string>();
        p.resolution = std::move(res);
      }
      if (p.serial >= queue.next_serial_) {
        throw Error(ErrorCode::kInvariantViolation, "pending serial not below next_serial");
      }
      queue.pendings_.emplace(p.serial, std::move(p));
    }
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kMalformedRelease, std::string("pending queue: ") + e.what());
  }
  return queue;
}

}  // namespace termforge
