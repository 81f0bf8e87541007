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

#ifndef TERMFORGE_REVIEW_SERVICE_H_
#define TERMFORGE_REVIEW_SERVICE_H_

#include <filesystem>
#include <functional>
#include <shared_mutex>
#include <string>

#include "json.hpp"
#include "termforge/error.h"
#include "termforge/integrator.h"
#include "termforge/store.h"

namespace httplib {
class Server;
}

namespace termforge {

inline constexpr size_t kDefaultPageSize = 20;
inline constexpr size_t kMaxPageSize = 500;

// HTTP status for an engine error: 404 UnknownPending, 409 AlreadyResolved,
// 422 CandidateNotOffered, 400 for malformed requests, 500 otherwise.
int http_status_for(ErrorCode code);

// The manual review surface over a workspace. Reads share a lock; decisions
// take it exclusively, so concurrent submissions for one pending serialize
// and exactly one of them succeeds.
class ReviewService {
 public:
  using Persist = std::function<void(const Workspace &)>;

  ReviewService(Workspace &ws, CascadeParams params, Persist persist = {}, Clock clock = utc_now);

  // {"tasks": [...], "offset", "limit", "open"}; tasks oldest first.
  nlohmann::json list_pending(size_t limit, size_t offset) const;

  // Applies the decision and persists before returning. Throws Error.
  nlohmann::json submit_decision(const std::string &pending_id, const ReviewDecision &decision);

  // {"open", "resolved", "total", "decisions_by_reviewer", "coverage", "untyped"}
  nlohmann::json queue_stats() const;

  // GET /api/pending, POST /api/pending/{id}/decision, GET /api/stats, and
  // the UI bundle (if `ui_dir` exists) at "/".
  void mount(httplib::Server &server, const std::filesystem::path &ui_dir = {});

 private:
  nlohmann::json task_json(const PendingReview &pending) const;

  Workspace &ws_;
  CascadeParams params_;
  Persist persist_;
  Clock clock_;
  mutable std::shared_mutex mutex_;
};

}  // namespace termforge

#endif  // TERMFORGE_REVIEW_SERVICE_H_
