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

#ifndef TERMFORGE_PIPELINE_H_
#define TERMFORGE_PIPELINE_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "termforge/integrator.h"
#include "termforge/source_ingest.h"
#include "termforge/store.h"

namespace termforge {

struct IngestSummary {
  size_t source_concepts = 0;  // parsed, before filtering
  size_t merged = 0;
  size_t new_concepts = 0;
  size_t pending = 0;          // newly parked for review
  size_t already_pending = 0;  // still parked from an earlier run
  size_t atoms_added = 0;
  size_t duplicates = 0;
  size_t conflicts = 0;
  size_t untyped = 0;
  size_t dropped_concepts = 0;
  size_t filtered_terms = 0;
  size_t malformed_rows = 0;
  std::vector<std::string> created_types;
  std::vector<nlohmann::json> log;  // one record per source concept, file order
};

// Registers the source, creates any missing semantic subtypes the adapter
// declares, applies the scope filter, and integrates every surviving source
// concept in file order.
IngestSummary ingest_source(Workspace &ws, const SourceAdapterConfig &config, const ParseResult &parsed,
                            const CascadeParams &params, const Clock &clock = utc_now);

}  // namespace termforge

#endif  // TERMFORGE_PIPELINE_H_
