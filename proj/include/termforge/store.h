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

#ifndef TERMFORGE_STORE_H_
#define TERMFORGE_STORE_H_

#include <filesystem>
#include <vector>

#include "json.hpp"
#include "termforge/normalizer.h"
#include "termforge/review_queue.h"
#include "termforge/semnet.h"
#include "termforge/term_index.h"
#include "termforge/vocabulary.h"

namespace termforge {

// Everything one store directory holds, plus the derived term index.
struct Workspace {
  Vocabulary vocab;
  SemanticNetwork hierarchy;
  ReviewQueue reviews;
  TermIndex index;

  // Empty vocabulary with the fixed top-level hierarchy.
  static Workspace create(Normalizer normalizer = Normalizer());

  void rebuild_index(Normalizer normalizer);
};

// A store directory is a release (label "working") plus the review queue in
// pending.json and an append-only integration log in runlog.jsonl.
inline constexpr std::string_view kWorkingLabel = "working";
inline constexpr std::string_view kPendingFile = "pending.json";
inline constexpr std::string_view kRunLogFile = "runlog.jsonl";
inline constexpr std::string_view kLockFile = ".lock";

bool store_exists(const std::filesystem::path &dir);

// Throws MalformedRelease when the directory is not a store, plus every
// load_release error.
Workspace open_store(const std::filesystem::path &dir, Normalizer normalizer = Normalizer());

void save_store(const Workspace &ws, const std::filesystem::path &dir);

void append_run_log(const std::filesystem::path &dir, const std::vector<nlohmann::json> &records);

// Exclusive advisory lock on a store directory for the life of the object.
class StoreLock {
 public:
  // Creates the directory if needed. Throws StoreLocked if another process
  // holds the lock.
  explicit StoreLock(const std::filesystem::path &dir);
  ~StoreLock();

  StoreLock(const StoreLock &) = delete;
  StoreLock &operator=(const StoreLock &) = delete;

 private:
  int fd_ = -1;
};

}  // namespace termforge

#endif  // TERMFORGE_STORE_H_
