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

#ifndef TERMFORGE_SOURCE_INGEST_H_
#define TERMFORGE_SOURCE_INGEST_H_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "termforge/review_queue.h"
#include "termforge/vocabulary.h"

namespace termforge {

// Three generic file shapes. All are a header row plus pipe-delimited rows;
// every row yields the name cell plus any synonym cells. Rows sharing a code
// are grouped into one source concept. The shape picks default TTYs and the
// default parent for auto-created semantic subtypes.
enum class SourceFormat { kConceptTermTable, kGeneTable, kVariantTable };

struct SourceAdapterConfig {
  std::string source_abbr;
  std::string version;
  int precedence_rank = 0;
  std::map<std::string, int> tty_ranks;
  SourceFormat format = SourceFormat::kConceptTermTable;

  std::string code_column;
  std::string name_column;
  std::vector<std::string> synonym_columns;
  std::string synonym_delimiter = ";";

  // Concept-term tables may carry a raw term-type column; its values go
  // through tty_map. For the other shapes tty_map is keyed by column name.
  std::string tty_column;
  std::map<std::string, std::string> tty_map;

  std::string type_column;
  std::map<std::string, std::string> type_map;  // raw value -> type label
  std::string default_type;  // label for concepts with no mapped type
  std::string type_parent;  // label under which unmapped raw types are created

  std::string language_column;
  std::string species_column;
  std::string default_language;
  std::string default_species;
  std::set<std::string> allowed_languages;  // empty = no filter
  std::set<std::string> allowed_species;    // empty = no filter

  SourceRegistryEntry registry_entry() const;

  // Flat `key = value` lines; lists are comma separated, maps are
  // comma-separated `key:value` pairs. Throws InvalidConfig, IOFailure.
  static SourceAdapterConfig parse(std::istream &in);
  static SourceAdapterConfig load(const std::filesystem::path &path);
};

struct MalformedRow {
  size_t line = 0;  // 1-based file line
  std::string reason;
};

struct ParseResult {
  std::vector<SourceConcept> concepts;  // first-appearance order of codes
  size_t data_rows = 0;
  size_t terms_parsed = 0;
  std::vector<MalformedRow> malformed;
  std::map<std::string, size_t> unmapped_types;
};

// Throws MissingColumn, EmptyFile, and MalformedRow when more than 10% of
// the data rows are malformed. Fewer malformed rows are skipped and listed.
ParseResult parse_source(std::istream &in, const SourceAdapterConfig &config);
ParseResult parse_source(const std::filesystem::path &path, const SourceAdapterConfig &config);

struct FilterResult {
  std::optional<SourceConcept> kept;
  size_t terms_dropped = 0;
  std::vector<std::string> reasons;  // "language", "species"
};

// Removes terms outside the allowed language and species sets. A concept
// with no surviving terms is dropped.
FilterResult scope_filter(const SourceConcept &sc, const SourceAdapterConfig &config);

}  // namespace termforge

#endif  // TERMFORGE_SOURCE_INGEST_H_
