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

// Small UTF-8 helpers shared across modules.

#ifndef TERMFORGE_TEXT_H_
#define TERMFORGE_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace termforge {

// Decodes UTF-8; invalid sequences become U+FFFD.
std::u32string utf8_decode(std::string_view text);
std::string utf8_encode(std::u32string_view text);
void utf8_append(std::string &out, char32_t cp);
size_t utf8_length(std::string_view text);

// Trims ASCII and Unicode whitespace from both ends.
std::string_view trim(std::string_view text);

std::vector<std::string> split(std::string_view text, char delimiter);

}  // namespace termforge

#endif  // TERMFORGE_TEXT_H_
