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


#include "termforge/match_cascade.h"

#include <cmath>
#include <random>

#include "doctest.h"
#include "termforge/error.h"
#include "termforge/similarity.h"
#include "termforge/term_index.h"
#include "termforge/vocabulary.h"
#include "test_support.h"

namespace termforge {
namespace {

using termforge_test::ref_similarity;

Atom draft(std::string term, std::string source = "S", std::string code = "", std::string tty = "PT") {
  Atom a;
  a.term = std::move(term);
  a.source_abbr = std::move(source);
  a.code = code.empty() ? a.term : std::move(code);
  a.tty = std::move(tty);
  return a;
}

struct Fixture {
  Vocabulary vocab;
  TermIndex index;

  Fixture() { vocab.registry().register_source({"S", "1", 1, {}}); }

  Identifier add(const std::string &term, const std::string &code = "") {
    Identifier mc = vocab.create_concept(draft(term, "S", code));
    index.add_atom(mc, vocab.atom_at(vocab.concept_at(mc).atoms.front()));
    return mc;
  }

  void synonym(Identifier mc, const std::string &term) {
    AddAtomResult r = vocab.add_atom(mc, draft(term, "S", vocab.preferred_atom(vocab.concept_at(mc)).code, "SY"));
    if (r.status == AddAtomStatus::kAdded) index.add_atom(mc, vocab.atom_at(r.maid));
  }
};

TEST_CASE("levenshtein basics") {
  CHECK(levenshtein(U"", U"") == 0);
  CHECK(levenshtein(U"abc", U"") == 3);
  CHECK(levenshtein(U"kitten", U"sitting") == 3);
  CHECK(levenshtein(U"cancer lung", U"bone fracture") == 10);
  CHECK(levenshtein(U"é", U"e") == 1);  // code points, not bytes
}

TEST_CASE("similarity values") {
  Normalizer n;
  CHECK(similarity("Lung Cancer", "lung cancer", n) == doctest::Approx(1.0));
  // Jaccard 0; edit distance 10 over 13 code points.
  CHECK(similarity("lung cancer", "bone fracture", n) == doctest::Approx(0.5 * (1.0 - 10.0 / 13.0)).epsilon(1e-12));
  CHECK(similarity("", "x", n) == 0.0);
  CHECK(similarity("", "", n) == 0.0);
  CHECK(similarity("the", "of", n) == 0.0);  // both normalize to empty
  // One shared token of three, one edit over 17 code points.
  CHECK(similarity("alzheimer desease", "Alzheimer's disease", n) ==
        doctest::Approx(0.5 / 3.0 + 0.5 * (16.0 / 17.0)).epsilon(1e-12));
  // No shared token: "alzheimers" vs "alzheimer", "desease" vs "disease".
  CHECK(similarity("alzheimers desease", "Alzheimer's Disease", n) ==
        doctest::Approx(0.5 * (1.0 - 2.0 / 18.0)).epsilon(1e-12));
}

TEST_CASE("similarity agrees with the reference, is symmetric and bounded") {
  Normalizer n;
  std::mt19937 rng(9);
  const char *words[] = {"lung", "lungs", "cancer", "cancers", "heart", "hart", "of", "bone", "b", "xyz"};
  auto phrase = [&] {
    std::string s;
    int k = rng() % 4;
    for (int i = 0; i < k; ++i) s += std::string(words[rng() % 10]) + " ";
    return s;
  };
  for (int i = 0; i < 2000; ++i) {
    std::string a = phrase(), b = phrase();
    double ab = similarity(a, b, n);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(ab == doctest::Approx(ref_similarity(a, b)).epsilon(1e-12));
    CHECK(ab == similarity(b, a, n));
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
  }
}

TEST_CASE("weights are validated") {
  CHECK_NOTHROW((SimilarityWeights{0.3, 0.7}.validate()));
  CHECK_THROWS_AS((SimilarityWeights{0.5, 0.6}.validate()), Error);
  CHECK_THROWS_AS((SimilarityWeights{-0.5, 1.5}.validate()), Error);
  CascadeParams p;
  p.theta = 1.5;
  CHECK_THROWS_AS(p.validate(), Error);
  Normalizer n;
  CHECK(similarity("lung cancer", "bone fracture", n, {1.0, 0.0}) == 0.0);
}

TEST_CASE("exact stage: code then string") {
  Fixture f;
  f.vocab.registry().register_source({"HGNC", "1", 2, {}});
  Identifier brca = f.vocab.create_concept(draft("BRCA1", "HGNC", "HGNC:1100", "SYM"));
  f.index.add_atom(brca, f.vocab.atom_at(f.vocab.concept_at(brca).atoms.front()));
  Identifier herceptin = f.add("Herceptin");
  MatchCascade cascade(f.index, {});

  MatchResult by_code = cascade.exact_match(draft("breast cancer 1", "HGNC", "HGNC:1100"));
  CHECK(by_code.stage == MatchStage::kExact);
  REQUIRE(by_code.candidates.size() == 1);
  CHECK(by_code.candidates[0].mcid == brca);

  MatchResult by_string = cascade.exact_match(draft("Herceptin", "DRUGBANK", "DB00072"));
  CHECK(by_string.stage == MatchStage::kExact);
  CHECK(by_string.candidates.at(0).mcid == herceptin);

  CHECK(cascade.exact_match(draft("herceptin", "DRUGBANK", "DB00072")).stage == MatchStage::kNone);
  CHECK(cascade.run(draft("never seen", "X", "0")).stage == MatchStage::kNone);
}

TEST_CASE("norm stage") {
  Fixture f;
  Identifier alz = f.add("Alzheimer's disease");
  Identifier heart = f.add("Attack, Heart");
  MatchCascade cascade(f.index, {});
  MatchResult r = cascade.norm_match(draft("Alzheimers Disease", "X"));
  CHECK(r.stage == MatchStage::kNone);  // "alzheimers" keeps its s
  r = cascade.norm_match(draft("ALZHEIMER'S DISEASE", "X"));
  CHECK(r.stage == MatchStage::kNorm);
  CHECK(r.candidates.at(0).mcid == alz);
  CHECK(cascade.norm_match(draft("heart attack", "X")).candidates.at(0).mcid == heart);
  CHECK(cascade.norm_match(draft("???", "X")).stage == MatchStage::kNone);
}

TEST_CASE("norm hits come back sorted by serial") {
  Fixture f;
  Identifier a = f.add("heart attack", "1");
  Identifier b = f.add("Heart-Attack", "2");
  MatchCascade cascade(f.index, {});
  MatchResult r = cascade.run(draft("attack heart", "X"));
  CHECK(r.stage == MatchStage::kNorm);
  REQUIRE(r.candidates.size() == 2);
  CHECK(r.candidates[0].mcid == a);
  CHECK(r.candidates[1].mcid == b);
}

TEST_CASE("fuzzy stage") {
  Fixture f;
  Identifier alz = f.add("Alzheimer's Disease");
  f.add("Parkinson disease");
  f.add("bone fracture");
  MatchCascade cascade(f.index, {});

  MatchResult r = cascade.run(draft("alzheimer desease", "X"));
  CHECK(r.stage == MatchStage::kFuzzy);
  REQUIRE(r.candidates.size() == 1);
  CHECK(r.candidates[0].mcid == alz);
  CHECK(r.candidates[0].score == doctest::Approx(0.6372549019607843).epsilon(1e-12));

  // Misspelling both words leaves no shared token, so nothing is reachable.
  CHECK(cascade.run(draft("alzheimers desease", "X")).stage == MatchStage::kNone);
  CHECK(cascade.run(draft("quantum chromodynamics", "X")).stage == MatchStage::kNone);
}

TEST_CASE("fuzzy keeps the best of several forms") {
  Fixture f;
  Identifier mc = f.add("renal failure");
  f.synonym(mc, "kidney failure chronic");
  MatchCascade cascade(f.index, {});
  MatchResult r = cascade.fuzzy_match(draft("kidney failur chronic", "X"));
  REQUIRE(r.candidates.size() == 1);
  CHECK(r.candidates[0].score ==
        doctest::Approx(ref_similarity("kidney failur chronic", "kidney failure chronic")).epsilon(1e-12));
}

TEST_CASE("fuzzy truncates to five, best first") {
  Fixture f;
  std::vector<Identifier> ids;
  for (int i = 0; i < 10; ++i) ids.push_back(f.add("lung tumour type " + std::to_string(i)));
  MatchCascade cascade(f.index, {});
  MatchResult r = cascade.run(draft("lung tumour type", "X"));
  CHECK(r.stage == MatchStage::kFuzzy);
  REQUIRE(r.candidates.size() == 5);
  for (size_t i = 0; i < 5; ++i) {
    CHECK(r.candidates[i].mcid == ids[i]);  // equal scores: serial order
    CHECK(r.candidates[i].score >= 0.6);
  }
}

TEST_CASE("theta gates fuzzy candidates") {
  Fixture f;
  f.add("alzheimer disease");
  CascadeParams strict;
  strict.theta = 0.9;
  MatchCascade cascade(f.index, strict);
  CHECK(cascade.run(draft("alzheimer desease", "X")).stage == MatchStage::kNone);
}

TEST_CASE("counters show short-circuiting") {
  Fixture f;
  f.add("heart attack");
  MatchCascade cascade(f.index, {});
  cascade.run(draft("heart attack", "X"));
  CascadeCounts c = cascade.counts();
  CHECK(c.exact == 1);
  CHECK(c.norm == 0);
  CHECK(c.fuzzy == 0);
  cascade.run(draft("Attack, heart", "X"));
  c = cascade.counts();
  CHECK(c.norm == 1);
  CHECK(c.fuzzy == 0);
  cascade.run(draft("heart atack", "X"));
  CHECK(cascade.counts().fuzzy == 1);
  cascade.reset_counts();
  CHECK(cascade.counts().exact == 0);
}

TEST_CASE("incremental index equals a rebuild") {
  std::mt19937 rng(21);
  Fixture f;
  std::vector<Identifier> ids;
  const char *words[] = {"lung", "Heart's", "attack", "of", "CANCER", "bone", "-", "x"};
  for (int step = 0; step < 600; ++step) {
    std::string term;
    for (int k = rng() % 4 + 1; k > 0; --k) term += std::string(words[rng() % 8]) + " ";
    term += std::to_string(rng() % 40);
    if (ids.empty() || rng() % 3 == 0) {
      std::string code = "c" + std::to_string(step);
      if (!f.vocab.find_atom({"S", code, term, "PT"})) ids.push_back(f.add(term, code));
    } else {
      f.synonym(ids[rng() % ids.size()], term);
    }
    if (step % 100 == 0) REQUIRE(f.index.consistent_with(f.vocab));
  }
  CHECK(f.index.consistent_with(f.vocab));
  CHECK(f.index == TermIndex::build(f.vocab));
}

}  // namespace
}  // namespace termforge
