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


#include "termforge/source_ingest.h"

#include <sstream>

#include "doctest.h"
#include "termforge/error.h"
#include "termforge/pipeline.h"
#include "termforge/store.h"
#include "test_support.h"

namespace termforge {
namespace {

using termforge_test::fixture;

ErrorCode parse_error(const std::string &text, const SourceAdapterConfig &config) {
  std::istringstream in(text);
  try {
    parse_source(in, config);
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("parsed without error");
  return ErrorCode::kIOFailure;
}

std::string fixed_clock() { return "2026-01-01T00:00:00Z"; }

TEST_CASE("config files load") {
  SourceAdapterConfig hgnc = SourceAdapterConfig::load(fixture("hgnc.conf"));
  CHECK(hgnc.source_abbr == "HGNC");
  CHECK(hgnc.format == SourceFormat::kGeneTable);
  CHECK(hgnc.tty_ranks == std::map<std::string, int>{{"SY", 2}, {"SYM", 1}});
  CHECK(hgnc.synonym_columns == std::vector<std::string>{"alias_symbol"});
  CHECK(hgnc.type_parent == "Gene");
  CHECK(hgnc.registry_entry().precedence_rank == 2);

  SourceAdapterConfig umls = SourceAdapterConfig::load(fixture("umls.conf"));
  CHECK(umls.type_map.at("T023") == "Anatomical Structure");
  CHECK(umls.allowed_languages == std::set<std::string>{"ENG"});
  CHECK(umls.type_parent.empty());
}

TEST_CASE("config errors") {
  auto code_of = [](const std::string &text) {
    std::istringstream in(text);
    try {
      SourceAdapterConfig::parse(in);
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::kIOFailure;
  };
  const std::string base = "source_abbr = X\nprecedence_rank = 1\ncode_column = c\nname_column = n\n";
  CHECK(code_of(base + "colour = blue\n") == ErrorCode::kInvalidConfig);
  CHECK(code_of(base + "format = spreadsheet\n") == ErrorCode::kInvalidConfig);
  CHECK(code_of(base + "tty_ranks = PT\n") == ErrorCode::kInvalidConfig);
  CHECK(code_of("source_abbr = X\ncode_column = c\nname_column = n\n") == ErrorCode::kInvalidConfig);
  CHECK(code_of(base + "just words\n") == ErrorCode::kInvalidConfig);
}

TEST_CASE("gene row expands symbol and aliases") {
  SourceAdapterConfig config = SourceAdapterConfig::load(fixture("hgnc.conf"));
  ParseResult r = parse_source(fixture("hgnc.txt"), config);
  REQUIRE(r.concepts.size() == 5);
  const SourceConcept &brca1 = r.concepts[0];
  CHECK(brca1.code == "HGNC:1100");
  REQUIRE(brca1.terms.size() == 3);
  CHECK(brca1.terms[0] == SourceTerm{"BRCA1", "SYM", "ENG", "human"});
  CHECK(brca1.terms[1] == SourceTerm{"RNF53", "SY", "ENG", "human"});
  CHECK(brca1.terms[2] == SourceTerm{"BRCAI", "SY", "ENG", "human"});
  CHECK(brca1.type_labels == std::vector<std::string>{"Gene"});
  CHECK(r.concepts[3].terms.size() == 4);
  CHECK(r.data_rows == 5);
  CHECK(r.terms_parsed == 3 + 3 + 3 + 4 + 2);
  CHECK(r.malformed.empty());
}

TEST_CASE("concept-term rows group by code in first-appearance order") {
  SourceAdapterConfig config = SourceAdapterConfig::load(fixture("umls.conf"));
  ParseResult r = parse_source(fixture("umls.txt"), config);
  std::vector<std::string> codes;
  size_t terms = 0;
  for (const auto &sc : r.concepts) {
    codes.push_back(sc.code);
    terms += sc.terms.size();
  }
  CHECK(codes == std::vector<std::string>{"C0006142", "C0002395", "C0376571", "C0728747", "C0024109", "C9999999",
                                          "C0027051"});
  CHECK(terms == r.terms_parsed);
  CHECK(r.terms_parsed == r.data_rows);  // one term per row in this shape
  CHECK(r.concepts[0].terms[1].tty == "SY");
  CHECK(r.concepts[0].terms[2].language == "FRE");
  CHECK(r.concepts[0].type_labels == std::vector<std::string>{"Disease"});

  // Deterministic: a second parse is identical.
  ParseResult again = parse_source(fixture("umls.txt"), config);
  CHECK(again.concepts == r.concepts);
}

TEST_CASE("malformed rows are counted and skipped") {
  SourceAdapterConfig config = SourceAdapterConfig::load(fixture("hgnc.conf"));
  std::string text = "symbol|hgnc_id|alias_symbol\n";
  for (int i = 0; i < 18; ++i) text += "G" + std::to_string(i) + "|HGNC:" + std::to_string(i) + "|\n";
  text += "ORPHAN||x\n";        // no code
  text += "TOO|HGNC:99|a|b\n";  // extra cell
  std::istringstream in(text);
  ParseResult r = parse_source(in, config);
  CHECK(r.data_rows == 20);
  CHECK(r.concepts.size() == 18);
  REQUIRE(r.malformed.size() == 2);
  CHECK(r.malformed[0].line == 20);
  CHECK(r.malformed[0].reason == "missing code");
  CHECK(r.malformed[1].line == 21);
  // Conservation: every data row is either parsed or reported.
  CHECK(r.concepts.size() + r.malformed.size() == r.data_rows);

  CHECK(parse_error(text + "x|\n", config) == ErrorCode::kMalformedRows);
}

TEST_CASE("empty files and missing columns") {
  SourceAdapterConfig config = SourceAdapterConfig::load(fixture("hgnc.conf"));
  CHECK(parse_error("", config) == ErrorCode::kEmptyFile);
  CHECK(parse_error("symbol|hgnc_id|alias_symbol\n", config) == ErrorCode::kEmptyFile);
  CHECK(parse_error("symbol|id|alias_symbol\nA|1|\n", config) == ErrorCode::kMissingColumn);
}

TEST_CASE("scope filter") {
  SourceAdapterConfig config;
  SourceConcept mouse{"X", "1", {{"Trp53", "PT", "ENG", "mouse"}}, {}};
  SourceConcept mixed{"X", "2", {{"Breast cancer", "PT", "ENG", "human"}, {"Cancer du sein", "SY", "FRE", "human"}}, {}};

  FilterResult identity = scope_filter(mixed, config);
  CHECK(identity.kept == mixed);
  CHECK(identity.terms_dropped == 0);

  config.allowed_species = {"human"};
  config.allowed_languages = {"ENG"};
  FilterResult dropped = scope_filter(mouse, config);
  CHECK_FALSE(dropped.kept.has_value());
  CHECK(dropped.reasons == std::vector<std::string>{"species"});

  FilterResult partial = scope_filter(mixed, config);
  REQUIRE(partial.kept.has_value());
  REQUIRE(partial.kept->terms.size() == 1);
  CHECK(partial.kept->terms[0].term == "Breast cancer");
  CHECK(partial.terms_dropped == 1);
  CHECK(partial.reasons == std::vector<std::string>{"language"});
}

TEST_CASE("end-to-end ingest of the three fixtures") {
  Workspace ws = Workspace::create();
  auto ingest = [&](const std::string &name) {
    SourceAdapterConfig config = SourceAdapterConfig::load(fixture(name + ".conf"));
    ParseResult parsed = parse_source(fixture(name + ".txt"), config);
    return ingest_source(ws, config, parsed, {}, fixed_clock);
  };

  IngestSummary umls = ingest("umls");
  CHECK(umls.source_concepts == 7);
  CHECK(umls.new_concepts == 6);
  CHECK(umls.dropped_concepts == 1);
  CHECK(umls.filtered_terms == 2);  // "Cancer du sein", "Maladie rare"
  CHECK(umls.atoms_added == 10);

  IngestSummary hgnc = ingest("hgnc");
  CHECK(hgnc.merged == 1);  // BRCA1 by string
  CHECK(hgnc.new_concepts == 4);
  CHECK(hgnc.atoms_added == 15);

  IngestSummary clinvar = ingest("clinvar");
  CHECK(clinvar.dropped_concepts == 1);  // mouse
  CHECK(clinvar.new_concepts == 3);
  CHECK(clinvar.created_types == std::vector<std::string>{"Duplication", "single nucleotide variant"});
  REQUIRE(clinvar.log.size() == 4);
  CHECK(clinvar.log[3]["outcome"] == "dropped");

  CoverageReport report = coverage_report(ws.vocab, ws.hierarchy);
  std::map<std::string, size_t> counts;
  for (const auto &row : report.rows) counts[row.label] = row.count;
  CHECK(counts["Disease"] == 3);
  CHECK(counts["Gene"] == 5);
  CHECK(counts["Mutation"] == 3);
  CHECK(counts["Chemical and Drug"] == 1);
  CHECK(counts["Anatomical Structure"] == 1);
  CHECK(report.untyped == 0);

  // Same file again: everything is already there.
  IngestSummary repeat = ingest("hgnc");
  CHECK(repeat.atoms_added == 0);
  CHECK(repeat.merged == 5);
  CHECK(repeat.duplicates == 15);
  CHECK(ws.index.consistent_with(ws.vocab));
  CHECK(ws.vocab.check_invariants().empty());
}

}  // namespace
}  // namespace termforge
