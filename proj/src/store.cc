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

#include "termforge/store.h"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <sstream>

#include "termforge/error.h"
#include "termforge/integrator.h"
#include "termforge/release.h"

namespace termforge {

Workspace Workspace::create(Normalizer normalizer) {
  Workspace ws;
  ws.hierarchy.init_top_level(ws.vocab.counters());
  ws.index = TermIndex(std::move(normalizer));
  return ws;
}

void Workspace::rebuild_index(Normalizer normalizer) { index = TermIndex::build(vocab, std::move(normalizer)); }

bool store_exists(const std::filesystem::path &dir) {
  return std::filesystem::exists(dir / kManifestFile) && std::filesystem::exists(dir / kPendingFile);
}

Workspace open_store(const std::filesystem::path &dir, Normalizer normalizer) {
  if (!store_exists(dir)) throw Error(ErrorCode::kMalformedRelease, dir.string() + " is not an initialized store");
  ReleaseContents release = load_release(dir);
  Workspace ws;
  ws.vocab = std::move(release.vocab);
  ws.hierarchy = std::move(release.hierarchy);

  std::ifstream in(dir / kPendingFile);
  if (!in) throw Error(ErrorCode::kIOFailure, "cannot read pending queue");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kMalformedRelease, std::string("pending queue: ") + e.what());
  }
  ws.reviews = ReviewQueue::from_json(doc);
  for (const auto &[serial, pending] : ws.reviews.pendings()) {
    for (const ReviewCandidate &c : pending.candidates) {
      if (pending.status == ReviewStatus::kOpen && ws.vocab.find_concept(c.mcid) == nullptr) {
        throw Error(ErrorCode::kDanglingReference, pending.id() + " offers unknown concept " + c.mcid.str());
      }
    }
  }
  ws.rebuild_index(std::move(normalizer));
  return ws;
}

void save_store(const Workspace &ws, const std::filesystem::path &dir) {
  export_release(ws.vocab, ws.hierarchy, std::string(kWorkingLabel), dir, utc_now());
  std::filesystem::path tmp = dir / (std::string(kPendingFile) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIOFailure, "cannot write pending queue");
    out << ws.reviews.to_json().dump(2) << "\n";
    if (!out) throw Error(ErrorCode::kIOFailure, "cannot write pending queue");
  }
  std::filesystem::rename(tmp, dir / kPendingFile);
}

void append_run_log(const std::filesystem::path &dir, const std::vector<nlohmann::json> &records) {
  std::ofstream out(dir / kRunLogFile, std::ios::app);
  if (!out) throw Error(ErrorCode::kIOFailure, "cannot append run log");
  for (const nlohmann::json &record : records) out << record.dump() << "\n";
}

StoreLock::StoreLock(const std::filesystem::path &dir) {
  std::filesystem::create_directories(dir);
  std::string path = (dir / kLockFile).string();
  fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
  if (fd_ < 0) throw Error(ErrorCode::kIOFailure, "cannot open " + path);
  if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
    ::close(fd_);
    fd_ = -1;
    throw Error(ErrorCode::kStoreLocked, dir.string() + " is in use by another process");
  }
}

StoreLock::~StoreLock() {
  if (fd_ >= 0) {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
}

}  // namespace termforge
