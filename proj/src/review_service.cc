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

#include "termforge/review_service.h"

#include <charconv>
#include <mutex>

#include "httplib.h"

namespace termforge {
namespace {

using nlohmann::json;

size_t parse_size(const std::string &text, const char *name) {
  size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidConfig, std::string(name) + " must be a non-negative integer");
  }
  return value;
}

void send_json(httplib::Response &res, int status, const json &body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response &res, const Error &e) {
  send_json(res, http_status_for(e.code()), {{"error", error_code_name(e.code())}, {"message", e.what()}});
}

}  // namespace

int http_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownPending: return 404;
    case ErrorCode::kAlreadyResolved: return 409;
    case ErrorCode::kCandidateNotOffered: return 422;
    case ErrorCode::kMalformedIdentifier:
    case ErrorCode::kInvalidConfig: return 400;
    default: return 500;
  }
}

ReviewService::ReviewService(Workspace &ws, CascadeParams params, Persist persist, Clock clock)
    : ws_(ws), params_(params), persist_(std::move(persist)), clock_(std::move(clock)) {
  params_.validate();
}

json ReviewService::task_json(const PendingReview &pending) const {
  json terms = json::array();
  for (const SourceTerm &t : pending.source.terms) {
    terms.push_back({{"term", t.term}, {"tty", t.tty}, {"language", t.language}, {"species", t.species}});
  }
  json candidates = json::array();
  for (const ReviewCandidate &c : pending.candidates) {
    json top_types = json::array();
    if (const Concept *target = ws_.vocab.find_concept(c.mcid)) {
      std::set<Identifier> reached;
      for (Identifier mtid : target->type_links) {
        if (ws_.hierarchy.find(mtid) == nullptr) continue;
        std::set<Identifier> up = ws_.hierarchy.ancestors(mtid);
        reached.insert(up.begin(), up.end());
      }
      for (Identifier top : ws_.hierarchy.top_types()) {
        if (reached.count(top) != 0) top_types.push_back(ws_.hierarchy.at(top).label);
      }
    }
    candidates.push_back(
        {{"mcid", c.mcid.str()}, {"preferred_term", c.preferred_term}, {"score", c.score}, {"top_types", top_types}});
  }
  return {{"pending_id", pending.id()},
          {"source", {{"source_abbr", pending.source.source_abbr}, {"code", pending.source.code}, {"terms", terms}}},
          {"candidates", candidates},
          {"created_at", pending.created_at}};
}

json ReviewService::list_pending(size_t limit, size_t offset) const {
  std::shared_lock lock(mutex_);
  json tasks = json::array();
  for (const PendingReview *pending : ws_.reviews.open(limit, offset)) tasks.push_back(task_json(*pending));
  return {{"tasks", tasks}, {"offset", offset}, {"limit", limit}, {"open", ws_.reviews.open_count()}};
}

json ReviewService::submit_decision(const std::string &pending_id, const ReviewDecision &decision) {
  std::unique_lock lock(mutex_);
  Integrator integrator(ws_.vocab, ws_.hierarchy, ws_.index, ws_.reviews, params_, clock_);
  IntegrationOutcome outcome = integrator.apply_review_decision(pending_id, decision);
  if (persist_) persist_(ws_);
  json added = json::array();
  for (Identifier maid : outcome.added_maids) added.push_back(maid.str());
  return {{"pending_id", pending_id},
          {"outcome", outcome_kind_name(outcome.kind)},
          {"mcid", outcome.mcid.str()},
          {"added_maids", added},
          {"duplicates", outcome.duplicates}};
}

json ReviewService::queue_stats() const {
  std::shared_lock lock(mutex_);
  CoverageReport report = coverage_report(ws_.vocab, ws_.hierarchy);
  json coverage = json::array();
  for (const CoverageRow &row : report.rows) coverage.push_back({{"label", row.label}, {"count", row.count}});
  return {{"open", ws_.reviews.open_count()},
          {"resolved", ws_.reviews.resolved_count()},
          {"total", ws_.reviews.total()},
          {"decisions_by_reviewer", ws_.reviews.decisions_by_reviewer()},
          {"coverage", coverage},
          {"untyped", report.untyped}};
}

void ReviewService::mount(httplib::Server &server, const std::filesystem::path &ui_dir) {
  server.Get("/api/pending", [this](const httplib::Request &req, httplib::Response &res) {
    try {
      size_t limit = req.has_param("limit") ? parse_size(req.get_param_value("limit"), "limit") : kDefaultPageSize;
      size_t offset = req.has_param("offset") ? parse_size(req.get_param_value("offset"), "offset") : 0;
      if (limit == 0 || limit > kMaxPageSize) {
        throw Error(ErrorCode::kInvalidConfig, "limit must be in 1.." + std::to_string(kMaxPageSize));
      }
      send_json(res, 200, list_pending(limit, offset));
    } catch (const Error &e) {
      send_error(res, e);
    }
  });

  server.Post(R"(/api/pending/([^/]+)/decision)", [this](const httplib::Request &req, httplib::Response &res) {
    try {
      json body;
      try {
        body = json::parse(req.body);
      } catch (const json::exception &) {
        throw Error(ErrorCode::kInvalidConfig, "body is not JSON");
      }
      if (!body.is_object() || !body.contains("decision") || !body["decision"].is_string()) {
        throw Error(ErrorCode::kInvalidConfig, "missing 'decision'");
      }
      std::string reviewer = body.value("reviewer", "");
      std::string kind = body["decision"].get<std::string>();
      ReviewDecision decision;
      if (kind == "choose") {
        if (!body.contains("mcid") || !body["mcid"].is_string()) {
          throw Error(ErrorCode::kInvalidConfig, "choose needs 'mcid'");
        }
        decision = ReviewDecision::choose(Identifier::parse(body["mcid"].get<std::string>(), IdKind::kConcept),
                                          reviewer);
      } else if (kind == "reject_all") {
        decision = ReviewDecision::reject_all(reviewer);
      } else {
        throw Error(ErrorCode::kInvalidConfig, "decision must be 'choose' or 'reject_all'");
      }
      send_json(res, 200, submit_decision(req.matches[1].str(), decision));
    } catch (const Error &e) {
      send_error(res, e);
    }
  });

  server.Get("/api/stats", [this](const httplib::Request &, httplib::Response &res) {
    send_json(res, 200, queue_stats());
  });

  if (!ui_dir.empty() && std::filesystem::is_directory(ui_dir)) {
    server.set_mount_point("/", ui_dir.string());
  } else {
    server.Get("/", [](const httplib::Request &, httplib::Response &res) {
      res.set_content("Curation UI bundle not installed; the JSON API is under /api.\n", "text/plain");
    });
  }
}

}  // namespace termforge
