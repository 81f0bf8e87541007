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

#include "termforge/pipeline.h"

#include <algorithm>

#include "termforge/error.h"

namespace termforge {

IngestSummary ingest_source(Workspace &ws, const SourceAdapterConfig &config, const ParseResult &parsed,
                            const CascadeParams &params, const Clock &clock) {
  IngestSummary summary;
  summary.source_concepts = parsed.concepts.size();
  summary.malformed_rows = parsed.malformed.size();

  ws.vocab.registry().register_source(config.registry_entry());

  // Subtypes named by the adapter but absent from the hierarchy.
  if (!config.type_parent.empty()) {
    std::optional<Identifier> parent = ws.hierarchy.find_by_label(config.type_parent);
    if (!parent) throw Error(ErrorCode::kInvalidConfig, "type_parent '" + config.type_parent + "' is not a known type");
    for (const SourceConcept &sc : parsed.concepts) {
      for (const std::string &label : sc.type_labels) {
        if (ws.hierarchy.find_by_label(label)) continue;
        ws.hierarchy.add_subtype(ws.vocab.counters(), label, {*parent}, config.source_abbr);
        summary.created_types.push_back(label);
      }
    }
  }

  Integrator integrator(ws.vocab, ws.hierarchy, ws.index, ws.reviews, params, clock);
  for (const SourceConcept &sc : parsed.concepts) {
    FilterResult filtered = scope_filter(sc, config);
    summary.filtered_terms += filtered.terms_dropped;
    if (!filtered.kept) {
      ++summary.dropped_concepts;
      summary.log.push_back({{"source_abbr", sc.source_abbr},
                             {"code", sc.code},
                             {"outcome", "dropped"},
                             {"reasons", filtered.reasons}});
      continue;
    }
    IntegrationOutcome outcome = integrator.integrate(*filtered.kept);
    switch (outcome.kind) {
      case OutcomeKind::kMergedInto: ++summary.merged; break;
      case OutcomeKind::kNewConcept: ++summary.new_concepts; break;
      case OutcomeKind::kPendingReview:
        if (std::find(outcome.events.begin(), outcome.events.end(), "already_pending") != outcome.events.end()) {
          ++summary.already_pending;
        } else {
          ++summary.pending;
        }
        break;
    }
    summary.atoms_added += outcome.added_maids.size();
    summary.duplicates += outcome.duplicates;
    summary.conflicts += outcome.conflict;
    summary.untyped += outcome.untyped;
    nlohmann::json record = run_log_record(*filtered.kept, outcome);
    if (!filtered.reasons.empty()) record["filtered_terms"] = filtered.terms_dropped;
    summary.log.push_back(std::move(record));
  }
  return summary;
}

}  // namespace termforge
