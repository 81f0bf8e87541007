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

// Shared helpers for the test binaries: scratch directories, fixture paths
// and small reference implementations written independently of the library.

#ifndef TERMFORGE_TESTS_TEST_SUPPORT_H_
#define TERMFORGE_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <atomic>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unistd.h>
#include <vector>

namespace termforge_test {

inline std::filesystem::path fixture(const std::string &name) {
  return std::filesystem::path(TERMFORGE_FIXTURE_DIR) / name;
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> seq{0};
    path_ = std::filesystem::temp_directory_path() /
            ("termforge-test-" + std::to_string(::getpid()) + "-" + std::to_string(seq++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path operator/(const std::string &name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spit(const std::filesystem::path &path, const std::string &data) {
  std::ofstream out(path, std::ios::binary);
  out << data;
}

// ---------------------------------------------------------------------------
// Reference implementations. Deliberately naive: full DP matrices, linear
// scans, ASCII-only text handling.

// Textbook Wagner-Fischer over bytes (callers pass ASCII).
inline size_t ref_levenshtein(const std::string &a, const std::string &b) {
  std::vector<std::vector<size_t>> d(a.size() + 1, std::vector<size_t>(b.size() + 1));
  for (size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      size_t sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
    }
  }
  return d[a.size()][b.size()];
}

inline const std::set<std::string> &ref_stop_words() {
  static const std::set<std::string> words = {"a",  "an", "and", "by",   "for", "in",
                                              "of", "on", "the", "to", "with", "nos"};
  return words;
}

struct RefNorm {
  std::vector<std::string> tokens;
  std::string joined;
};

// The six-step pipeline for ASCII input.
inline RefNorm ref_normalize(const std::string &raw) {
  auto words = [](const std::string &s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
  };
  std::string stripped;
  for (std::string w : words(raw)) {
    if (w.size() >= 2 && w[w.size() - 2] == '\'' && (w.back() == 's' || w.back() == 'S')) {
      w.resize(w.size() - 2);
    } else if (!w.empty() && w.back() == '\'') {
      w.pop_back();
    }
    stripped += w;
    stripped += ' ';
  }
  for (char &c : stripped) {
    if (std::ispunct(static_cast<unsigned char>(c))) c = ' ';
  }
  RefNorm out;
  for (std::string w : words(stripped)) {
    for (char &c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (ref_stop_words().count(w) == 0) out.tokens.push_back(w);
  }
  std::sort(out.tokens.begin(), out.tokens.end());
  for (size_t i = 0; i < out.tokens.size(); ++i) {
    if (i) out.joined += ' ';
    out.joined += out.tokens[i];
  }
  return out;
}

inline double ref_jaccard(const std::vector<std::string> &a, const std::vector<std::string> &b) {
  std::set<std::string> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::set<std::string> all = sa;
  all.insert(sb.begin(), sb.end());
  if (all.empty()) return 0.0;
  size_t common = 0;
  for (const auto &t : sa) common += sb.count(t);
  return static_cast<double>(common) / static_cast<double>(all.size());
}

inline double ref_similarity(const RefNorm &a, const RefNorm &b) {
  if (a.joined.empty() && b.joined.empty()) return 0.0;
  double longest = static_cast<double>(std::max(a.joined.size(), b.joined.size()));
  double edit = 1.0 - static_cast<double>(ref_levenshtein(a.joined, b.joined)) / longest;
  return 0.5 * ref_jaccard(a.tokens, b.tokens) + 0.5 * edit;
}

inline double ref_similarity(const std::string &a, const std::string &b) {
  return ref_similarity(ref_normalize(a), ref_normalize(b));
}

// Hand-derived normalization goldens: input, expected joined form.
struct GoldenCase {
  const char *input;
  const char *expected;
};

inline const std::vector<GoldenCase> &normalization_goldens() {
  static const std::vector<GoldenCase> cases = {
      {"Alzheimer's Disease", "alzheimer disease"},
      {"Cancer of the Lung", "cancer lung"},
      {"heart attack", "attack heart"},
      {"", ""},
      {"Attack, Heart", "attack heart"},
      {"Downs' Syndrome", "downs syndrome"},
      {"Breast Cancer, Type 1", "1 breast cancer type"},
      {"BRCA1", "brca1"},
      {"Vitamin B12 Deficiency", "b12 deficiency vitamin"},
      {"Crohn’s disease", "crohn disease"},
      {"The Lung", "lung"},
      {"of the and", ""},
      {"???", ""},
      {"T-cell lymphoma", "cell lymphoma t"},
      {"Non-small cell lung carcinoma (NSCLC)", "carcinoma cell lung non nsclc small"},
      {"Hodgkin's  Lymphoma,  NOS", "hodgkin lymphoma"},
      {"Injury to the Knee", "injury knee"},
      {"ÄRZTE Straße", "straße ärzte"},
      {"Parkinson's disease's", "disease parkinson"},
      {"HER2/neu", "her2 neu"},
      {"Carcinoma in situ of Breast", "breast carcinoma situ"},
      {"Tumor+Necrosis=Factor", "factor necrosis tumor"},
      {"Alzheimer's, early onset", "alzheimer early onset s"},
      {"With Or Without", "or without"},
      {"Men's Health: A Guide", "guide health men"},
  };
  return cases;
}

}  // namespace termforge_test

#endif  // TERMFORGE_TESTS_TEST_SUPPORT_H_
