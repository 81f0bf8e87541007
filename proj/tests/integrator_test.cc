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


#include "termforge/integrator.h"

#include "doctest.h"
#include "termforge/error.h"
#include "termforge/store.h"

namespace termforge {
namespace {

std::string fixed_clock() { return "2026-01-01T00:00:00Z"; }

SourceConcept source(std::string abbr, std::string code, std::vector<std::string> terms,
                     std::vector<std::string> types = {}) {
  SourceConcept sc;
  sc.source_abbr = std::move(abbr);
  sc.code = std::move(code);
  for (size_t i = 0; i < terms.size(); ++i) sc.terms.push_back({terms[i], i == 0 ? "PT" : "SY", "ENG", "human"});
  sc.type_labels = std::move(types);
  return sc;
}

struct Env {
  Workspace ws = Workspace::create();
  Integrator integrator{ws.vocab, ws.hierarchy, ws.index, ws.reviews, {}, fixed_clock};

  Env() {
    ws.vocab.registry().register_source({"UMLS", "1", 1, {{"PT", 1}}});
    ws.vocab.registry().register_source({"HGNC", "1", 2, {{"SYM", 1}}});
    ws.vocab.registry().register_source({"DRUGBANK", "1", 3, {}});
  }

  IntegrationOutcome add(const SourceConcept &sc) { return integrator.integrate(sc); }

  // Bypasses matching, for fixtures whose terms would match each other.
  Identifier seed(const std::string &code, const std::string &term) {
    Atom atom;
    atom.term = term;
    atom.source_abbr = "UMLS";
    atom.code = code;
    atom.tty = "PT";
    Identifier mc = ws.vocab.create_concept(atom);
    ws.index.add_atom(mc, ws.vocab.atom_at(ws.vocab.concept_at(mc).atoms.front()));
    return mc;
  }
};

TEST_CASE("all terms unmatched: new concept") {
  Env env;
  IntegrationOutcome out = env.add(source("UMLS", "C1", {"Lung Cancer", "Carcinoma of lung"}, {"Disease"}));
  CHECK(out.kind == OutcomeKind::kNewConcept);
  CHECK(out.mcid == concept_id(1));
  CHECK(out.added_maids == std::vector<Identifier>{atom_id(1), atom_id(2)});
  const Concept &c = env.ws.vocab.concept_at(out.mcid);
  CHECK(c.type_links == std::set<Identifier>{*env.ws.hierarchy.find_by_label("Disease")});
  CHECK_FALSE(out.untyped);
  CHECK(env.ws.index.consistent_with(env.ws.vocab));
}

TEST_CASE("gene symbol exact match merges three synonyms") {
  Env env;
  IntegrationOutcome first = env.add(source("UMLS", "C0376571", {"BRCA1"}, {"Gene"}));
  SourceConcept gene = source("HGNC", "HGNC:1100", {"BRCA1", "RNF53", "BRCAI", "breast cancer 1"});
  for (auto &t : gene.terms) t.tty = "SY";
  gene.terms[0].tty = "SYM";
  IntegrationOutcome out = env.add(gene);
  CHECK(out.kind == OutcomeKind::kMergedInto);
  CHECK(out.mcid == first.mcid);
  CHECK(out.stage == MatchStage::kExact);
  CHECK(out.added_maids.size() == 4);  // the HGNC BRCA1 atom is a new tuple too
  CHECK(env.ws.vocab.concept_at(first.mcid).atoms.size() == 5);
  // UMLS still outranks HGNC for the preferred term.
  CHECK(env.ws.vocab.preferred_atom(env.ws.vocab.concept_at(first.mcid)).source_abbr == "UMLS");
}

TEST_CASE("re-integrating identical terms only counts duplicates") {
  Env env;
  SourceConcept sc = source("DRUGBANK", "DB00072", {"Trastuzumab", "Herceptin"});
  env.add(sc);
  size_t atoms = env.ws.vocab.atom_count();
  IntegrationOutcome again = env.add(sc);
  CHECK(again.kind == OutcomeKind::kMergedInto);
  CHECK(again.added_maids.empty());
  CHECK(again.duplicates == 2);
  CHECK(env.ws.vocab.atom_count() == atoms);
}

TEST_CASE("herceptin scenario: string match pulls in the other terms") {
  Env env;
  IntegrationOutcome umls = env.add(source("UMLS", "C0728747", {"Herceptin", "trastuzumab"}, {"Chemical and Drug"}));
  SourceConcept db = source("DRUGBANK", "DB00072",
                            {"Herceptin", "Herclon", "Trastuzumab-anns", "Kanjinti", "Ogivri", "Trazimera"});
  IntegrationOutcome out = env.add(db);
  CHECK(out.kind == OutcomeKind::kMergedInto);
  CHECK(out.mcid == umls.mcid);
  CHECK(out.added_maids.size() == 6);
}

TEST_CASE("norm-only match") {
  Env env;
  IntegrationOutcome base = env.add(source("UMLS", "C1", {"Attack, Heart"}));
  IntegrationOutcome out = env.add(source("DRUGBANK", "X", {"heart attack"}));
  CHECK(out.kind == OutcomeKind::kMergedInto);
  CHECK(out.stage == MatchStage::kNorm);
  CHECK(out.mcid == base.mcid);
}

TEST_CASE("fuzzy-only match parks a review and leaves the vocabulary alone") {
  Env env;
  IntegrationOutcome alz = env.add(source("UMLS", "C1", {"Alzheimer's Disease"}));
  Vocabulary before = env.ws.vocab;
  IntegrationOutcome out = env.add(source("DRUGBANK", "X", {"alzheimer desease"}));
  CHECK(out.kind == OutcomeKind::kPendingReview);
  CHECK(out.pending_id == "PR00000001");
  REQUIRE(out.candidates.size() == 1);
  CHECK(out.candidates[0].mcid == alz.mcid);
  CHECK(out.candidates[0].preferred_term == "Alzheimer's Disease");
  CHECK(env.ws.vocab == before);
  CHECK(env.ws.reviews.open_count() == 1);

  // Same source concept again: the open review is reused.
  IntegrationOutcome again = env.add(source("DRUGBANK", "X", {"alzheimer desease"}));
  CHECK(again.pending_id == out.pending_id);
  CHECK(env.ws.reviews.total() == 1);
}

TEST_CASE("fuzzy candidates are unioned across terms and capped at five") {
  Env env;
  for (int i = 0; i < 4; ++i) env.seed("A" + std::to_string(i), "renal tumour growth " + std::to_string(i));
  for (int i = 0; i < 4; ++i) env.seed("B" + std::to_string(i), "hepatic lesion benign " + std::to_string(i));
  IntegrationOutcome out = env.add(source("DRUGBANK", "Q", {"renal tumour growth", "hepatic lesion benign"}));
  CHECK(out.kind == OutcomeKind::kPendingReview);
  REQUIRE(out.candidates.size() == 5);
  for (size_t i = 1; i < out.candidates.size(); ++i) {
    CHECK(out.candidates[i - 1].score >= out.candidates[i].score);
  }
}

TEST_CASE("resolve_conflict rules") {
  auto hit = [](MatchStage stage, std::vector<uint32_t> serials) {
    MatchResult r;
    r.stage = stage;
    for (uint32_t s : serials) r.candidates.push_back({concept_id(s), 1.0});
    return r;
  };
  ConflictResolution single = resolve_conflict({hit(MatchStage::kExact, {4})});
  CHECK(single.winner == concept_id(4));
  CHECK_FALSE(single.conflict);

  ConflictResolution stage = resolve_conflict({hit(MatchStage::kNorm, {1}), hit(MatchStage::kExact, {2})});
  CHECK(stage.winner == concept_id(2));
  CHECK(stage.conflict);
  CHECK(stage.concepts_hit == std::vector<Identifier>{concept_id(1), concept_id(2)});

  ConflictResolution most = resolve_conflict(
      {hit(MatchStage::kNorm, {1}), hit(MatchStage::kNorm, {2}), hit(MatchStage::kNorm, {2})});
  CHECK(most.winner == concept_id(2));

  ConflictResolution lowest = resolve_conflict({hit(MatchStage::kNorm, {7}), hit(MatchStage::kNorm, {3})});
  CHECK(lowest.winner == concept_id(3));

  // Fuzzy and none results do not vote.
  ConflictResolution fuzzy = resolve_conflict({hit(MatchStage::kFuzzy, {1}), hit(MatchStage::kNorm, {9})});
  CHECK(fuzzy.winner == concept_id(9));
  CHECK_THROWS_AS(resolve_conflict({hit(MatchStage::kFuzzy, {1})}), Error);
}

TEST_CASE("conflicting hits merge into the earliest-stage concept") {
  Env env;
  IntegrationOutcome c1 = env.add(source("UMLS", "C1", {"Myocardial infarction"}));
  IntegrationOutcome c2 = env.add(source("UMLS", "C2", {"Attack, Heart"}));
  IntegrationOutcome out = env.add(source("DRUGBANK", "X", {"heart attack", "Myocardial infarction"}));
  CHECK(out.kind == OutcomeKind::kMergedInto);
  CHECK(out.mcid == c1.mcid);
  CHECK(out.conflict);
  CHECK(out.concepts_hit == std::vector<Identifier>{c1.mcid, c2.mcid});
  nlohmann::json log = run_log_record(source("DRUGBANK", "X", {}), out);
  CHECK(log["conflict"] == true);
  CHECK(log["outcome"] == "merged_into");
}

TEST_CASE("review decisions") {
  Env env;
  IntegrationOutcome alz = env.add(source("UMLS", "C1", {"Alzheimer's Disease"}));
  IntegrationOutcome p1 = env.add(source("DRUGBANK", "X", {"alzheimer desease", "AD"}));
  IntegrationOutcome p2 = env.add(source("DRUGBANK", "Y", {"alzheimer diseas"}));

  IntegrationOutcome chosen = env.integrator.apply_review_decision(p1.pending_id, ReviewDecision::choose(alz.mcid, "ann"));
  CHECK(chosen.kind == OutcomeKind::kMergedInto);
  CHECK(chosen.mcid == alz.mcid);
  CHECK(chosen.added_maids.size() == 2);
  const PendingReview *resolved = env.ws.reviews.find(p1.pending_id);
  CHECK(resolved->status == ReviewStatus::kResolved);
  CHECK(resolved->resolution->reviewer == "ann");
  CHECK(resolved->resolution->decided_at == "2026-01-01T00:00:00Z");

  try {
    env.integrator.apply_review_decision(p1.pending_id, ReviewDecision::reject_all("bob"));
    FAIL("second decision accepted");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kAlreadyResolved);
  }
  try {
    env.integrator.apply_review_decision(p2.pending_id, ReviewDecision::choose(concept_id(77), "bob"));
    FAIL("unoffered candidate accepted");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kCandidateNotOffered);
  }
  try {
    env.integrator.apply_review_decision("PR00000099", ReviewDecision::reject_all("bob"));
    FAIL("unknown pending accepted");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kUnknownPending);
  }

  IntegrationOutcome rejected = env.integrator.apply_review_decision(p2.pending_id, ReviewDecision::reject_all("bob"));
  CHECK(rejected.kind == OutcomeKind::kNewConcept);
  CHECK(rejected.mcid != alz.mcid);
  CHECK(env.ws.reviews.open_count() == 0);
  CHECK(env.ws.reviews.resolved_count() == 2);
  CHECK(env.ws.index.consistent_with(env.ws.vocab));
}

TEST_CASE("validation happens before any mutation") {
  Env env;
  Vocabulary before = env.ws.vocab;
  auto code_of = [&](const SourceConcept &sc) {
    try {
      env.add(sc);
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::kIOFailure;
  };
  CHECK(code_of(source("UMLS", "E", {})) == ErrorCode::kEmptySourceConcept);
  CHECK(code_of(source("NOPE", "E", {"x"})) == ErrorCode::kUnknownSource);
  CHECK(code_of(source("UMLS", "E", {"fine", "   "})) == ErrorCode::kInvalidAtom);
  CHECK(env.ws.vocab == before);
}

TEST_CASE("unknown type labels leave the concept untyped") {
  Env env;
  IntegrationOutcome out = env.add(source("UMLS", "C1", {"Thing"}, {"Organism"}));
  CHECK(out.untyped);
  CHECK(out.unknown_type_labels == std::vector<std::string>{"Organism"});
}

TEST_CASE("integration is deterministic") {
  auto run = [] {
    Env env;
    std::vector<std::string> trace;
    const char *batch[][2] = {{"C1", "lung cancer"}, {"C2", "Cancer of the Lung"}, {"C3", "lung cancr"},
                              {"C4", "bone fracture"}, {"C5", "fracture of bone"}, {"C6", "bone fractures"}};
    for (auto &row : batch) {
      IntegrationOutcome o = env.add(source("UMLS", row[0], {row[1]}));
      trace.push_back(std::string(outcome_kind_name(o.kind)) + o.mcid.str() + o.pending_id);
    }
    return trace;
  };
  CHECK(run() == run());
}

}  // namespace
}  // namespace termforge
