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

#include "termforge/normalizer.h"

#include <algorithm>
#include <fstream>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "termforge/error.h"
#include "termforge/text.h"

namespace termforge {
namespace {

constexpr char32_t kApostrophe = U'\'';
constexpr char32_t kRightQuote = U'’';

bool is_space(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

bool is_punct_or_symbol(char32_t c) {
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) & (U_GC_P_MASK | U_GC_S_MASK)) != 0;
}

std::u32string strip_possessive_cps(std::u32string token) {
  size_t n = token.size();
  if (n >= 2 && (token[n - 1] == U's' || token[n - 1] == U'S') &&
      (token[n - 2] == kApostrophe || token[n - 2] == kRightQuote)) {
    token.resize(n - 2);
  } else if (n >= 1 && (token[n - 1] == kApostrophe || token[n - 1] == kRightQuote)) {
    token.resize(n - 1);
  }
  return token;
}

std::vector<std::u32string> split_whitespace(const std::u32string &text) {
  std::vector<std::u32string> words;
  std::u32string current;
  for (char32_t c : text) {
    if (is_space(c)) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::string nfc(std::string_view raw) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) return std::string(raw);
  icu::UnicodeString input = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  icu::UnicodeString output = normalizer->normalize(input, status);
  if (U_FAILURE(status)) return std::string(raw);
  std::string out;
  output.toUTF8String(out);
  return out;
}

std::string fold(const std::u32string &word) {
  std::string out;
  out.reserve(word.size());
  for (char32_t c : word) {
    utf8_append(out, static_cast<char32_t>(u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT)));
  }
  return out;
}

}  // namespace

std::string strip_possessives(std::string_view token) {
  return utf8_encode(strip_possessive_cps(utf8_decode(token)));
}

const std::set<std::string> &Normalizer::default_stop_words() {
  static const std::set<std::string> words = {"a",  "an", "and", "by", "for", "in",
                                              "of", "on", "the", "to", "with", "nos"};
  return words;
}

Normalizer::Normalizer() : stop_words_(default_stop_words()) {}

Normalizer::Normalizer(const std::set<std::string> &stop_words) {
  for (const std::string &word : stop_words) {
    std::string folded = fold(utf8_decode(trim(word)));
    if (!folded.empty()) stop_words_.insert(std::move(folded));
  }
}

Normalizer Normalizer::from_stopword_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIOFailure, "cannot read stop-word file " + path.string());
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string_view word = trim(line);
    if (!word.empty()) words.emplace(word);
  }
  return Normalizer(words);
}

NormalizedString Normalizer::normalize(std::string_view raw) const {
  std::u32string text = utf8_decode(nfc(raw));

  // Possessives.
  std::u32string stripped;
  for (const std::u32string &token : split_whitespace(text)) {
    if (!stripped.empty()) stripped.push_back(U' ');
    stripped += strip_possessive_cps(token);
  }

  // Punctuation and symbols.
  for (char32_t &c : stripped) {
    if (is_punct_or_symbol(c)) c = U' ';
  }

  NormalizedString result;
  for (const std::u32string &word : split_whitespace(stripped)) {
    std::string folded = fold(word);
    if (is_stop_word(folded)) continue;
    result.tokens.push_back(std::move(folded));
  }

  // Byte order of UTF-8 equals code point order.
  std::sort(result.tokens.begin(), result.tokens.end());
  for (const std::string &token : result.tokens) {
    if (!result.joined.empty()) result.joined.push_back(' ');
    result.joined += token;
  }
  return result;
}

}  // namespace termforge
