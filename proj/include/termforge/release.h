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

#ifndef TERMFORGE_RELEASE_H_
#define TERMFORGE_RELEASE_H_

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "termforge/semnet.h"
#include "termforge/vocabulary.h"

namespace termforge {

// Release directory layout: five pipe-delimited tables plus a JSON manifest.
//
//   MCONSO.RRF     MCID|MAID|term|source|code|TTY|P-or-S|language|species
//   MSTY.RRF       MCID|MTID
//   MTYPES.RRF     MTID|label|source_of_label|parent MTIDs comma-separated
//   MSOURCES.RRF   source|version|precedence_rank|TTY=rank,...
//   MCOUNTERS.RRF  MC|next  MA|next  MT|next
//   manifest       {"label", "timestamp", "tables": {name: {rows, sha256}}}
//
// Rows are sorted by primary then secondary ID so output is byte-stable.
// Inside fields, '|' is written as "\|", '\' as "\\", and line breaks as
// "\n" / "\r".
inline constexpr std::array<std::string_view, 5> kReleaseTables = {"MCONSO", "MSTY", "MTYPES", "MSOURCES",
                                                                   "MCOUNTERS"};
inline constexpr std::string_view kManifestFile = "manifest";

std::string table_file_name(std::string_view table);

struct TableInfo {
  std::string name;
  size_t rows = 0;
  std::string sha256;

  bool operator==(const TableInfo &) const = default;
};

struct ReleaseManifest {
  std::string label;
  std::string timestamp;
  std::vector<TableInfo> tables;  // kReleaseTables order
};

struct ReleaseContents {
  Vocabulary vocab;
  SemanticNetwork hierarchy;
  ReleaseManifest manifest;
};

std::string escape_field(std::string_view field);

// Splits one row on unescaped pipes and unescapes each field. Throws
// MalformedRelease on a dangling escape.
std::vector<std::string> split_row(std::string_view row);

std::string sha256_hex(std::string_view data);

// Writes a release. The vocabulary and hierarchy must pass their invariant
// checks and every type link must resolve (InvariantViolation otherwise);
// write failures raise IOFailure.
ReleaseManifest export_release(const Vocabulary &vocab, const SemanticNetwork &hierarchy, const std::string &label,
                               const std::filesystem::path &out_dir, const std::string &timestamp);

// Reads and verifies a release. Throws MalformedRelease, ChecksumMismatch,
// DanglingReference, InvariantViolation.
ReleaseContents load_release(const std::filesystem::path &dir);

}  // namespace termforge

#endif  // TERMFORGE_RELEASE_H_
