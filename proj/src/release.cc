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

#include "termforge/release.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "json.hpp"
#include "termforge/error.h"
#include "termforge/text.h"

namespace termforge {
namespace {

using nlohmann::json;

std::string join_row(const std::vector<std::string> &fields) {
  std::string row;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) row.push_back('|');
    row += escape_field(fields[i]);
  }
  row.push_back('\n');
  return row;
}

void write_file(const std::filesystem::path &path, const std::string &content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIOFailure, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::kIOFailure, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIOFailure, "cannot rename " + tmp.string() + ": " + ec.message());
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMalformedRelease, "missing " + path.filename().string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::vector<std::string>> parse_table(const std::string &content, std::string_view table,
                                                  size_t min_fields) {
  std::vector<std::vector<std::string>> rows;
  size_t start = 0;
  size_t line = 0;
  while (start < content.size()) {
    size_t end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    ++line;
    std::vector<std::string> fields = split_row(std::string_view(content).substr(start, end - start));
    if (fields.size() < min_fields) {
      throw Error(ErrorCode::kMalformedRelease,
                  std::string(table) + " line " + std::to_string(line) + ": too few fields");
    }
    rows.push_back(std::move(fields));
    start = end + 1;
  }
  return rows;
}

uint32_t parse_serial_value(const std::string &text, std::string_view what) {
  uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kMalformedRelease, std::string(what) + ": not a number: '" + text + "'");
  }
  return value;
}

Identifier parse_id(const std::string &text, IdKind kind) {
  try {
    return Identifier::parse(text, kind);
  } catch (const Error &e) {
    throw Error(ErrorCode::kMalformedRelease, e.what());
  }
}

std::string tty_ranks_field(const std::map<std::string, int> &ranks) {
  std::string out;
  for (const auto &[tty, rank] : ranks) {
    if (!out.empty()) out.push_back(',');
    out += tty + "=" + std::to_string(rank);
  }
  return out;
}

std::map<std::string, int> parse_tty_ranks(const std::string &field) {
  std::map<std::string, int> ranks;
  if (field.empty()) return ranks;
  for (const std::string &item : split(field, ',')) {
    size_t eq = item.rfind('=');
    if (eq == std::string::npos) throw Error(ErrorCode::kMalformedRelease, "bad TTY rank '" + item + "'");
    ranks[item.substr(0, eq)] = static_cast<int>(parse_serial_value(item.substr(eq + 1), "TTY rank"));
  }
  return ranks;
}

}  // namespace

std::string table_file_name(std::string_view table) { return std::string(table) + ".RRF"; }

std::string escape_field(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (char c : field) {
    switch (c) {
      case '|': out += "\\|"; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::vector<std::string> split_row(std::string_view row) {
  std::vector<std::string> fields(1);
  for (size_t i = 0; i < row.size(); ++i) {
    char c = row[i];
    if (c == '|') {
      fields.emplace_back();
    } else if (c == '\\') {
      if (++i == row.size()) throw Error(ErrorCode::kMalformedRelease, "dangling escape in row");
      switch (row[i]) {
        case '|': fields.back().push_back('|'); break;
        case '\\': fields.back().push_back('\\'); break;
        case 'n': fields.back().push_back('\n'); break;
        case 'r': fields.back().push_back('\r'); break;
        default: throw Error(ErrorCode::kMalformedRelease, "unknown escape in row");
      }
    } else {
      fields.back().push_back(c);
    }
  }
  return fields;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kIOFailure, "SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

ReleaseManifest export_release(const Vocabulary &vocab, const SemanticNetwork &hierarchy, const std::string &label,
                               const std::filesystem::path &out_dir, const std::string &timestamp) {
  std::vector<std::string> problems = vocab.check_invariants();
  for (std::string &p : hierarchy.check_invariants()) problems.push_back(std::move(p));
  if (!hierarchy.initialized()) problems.push_back("semantic hierarchy is not initialized");
  for (const auto &[serial, c] : vocab.concepts()) {
    for (Identifier mtid : c.type_links) {
      if (hierarchy.find(mtid) == nullptr) problems.push_back(c.mcid.str() + " links unknown type " + mtid.str());
    }
  }
  for (const auto &[serial, node] : hierarchy.nodes()) {
    if (serial >= vocab.counters().next(IdKind::kType)) problems.push_back("type counter is not ahead of " + node.mtid.str());
  }
  if (!problems.empty()) throw Error(ErrorCode::kInvariantViolation, problems.front());

  std::map<std::string_view, std::pair<std::string, size_t>> tables;

  {
    std::string out;
    size_t rows = 0;
    for (const auto &[serial, c] : vocab.concepts()) {
      std::vector<Identifier> maids = c.atoms;
      std::sort(maids.begin(), maids.end());
      for (Identifier maid : maids) {
        const Atom &a = vocab.atom_at(maid);
        out += join_row({c.mcid.str(), maid.str(), a.term, a.source_abbr, a.code, a.tty,
                         maid == c.preferred ? "P" : "S", a.language, a.species});
        ++rows;
      }
    }
    tables["MCONSO"] = {std::move(out), rows};
  }
  {
    std::string out;
    size_t rows = 0;
    for (const auto &[serial, c] : vocab.concepts()) {
      for (Identifier mtid : c.type_links) {
        out += join_row({c.mcid.str(), mtid.str()});
        ++rows;
      }
    }
    tables["MSTY"] = {std::move(out), rows};
  }
  {
    std::string out;
    for (const auto &[serial, node] : hierarchy.nodes()) {
      std::string parents;
      for (Identifier parent : node.parents) {
        if (!parents.empty()) parents.push_back(',');
        parents += parent.str();
      }
      out += join_row({node.mtid.str(), node.label, node.source_of_label, parents});
    }
    tables["MTYPES"] = {std::move(out), hierarchy.nodes().size()};
  }
  {
    std::string out;
    for (const auto &[abbr, entry] : vocab.registry().entries()) {
      out += join_row({abbr, entry.version, std::to_string(entry.precedence_rank), tty_ranks_field(entry.tty_ranks)});
    }
    tables["MSOURCES"] = {std::move(out), vocab.registry().entries().size()};
  }
  {
    std::string out;
    for (IdKind kind : {IdKind::kConcept, IdKind::kAtom, IdKind::kType}) {
      out += join_row({std::string(id_prefix(kind)), std::to_string(vocab.counters().next(kind))});
    }
    tables["MCOUNTERS"] = {std::move(out), 3};
  }

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::kIOFailure, "cannot create " + out_dir.string() + ": " + ec.message());

  ReleaseManifest manifest{label, timestamp, {}};
  json manifest_json = {{"label", label}, {"timestamp", timestamp}, {"tables", json::object()}};
  for (std::string_view name : kReleaseTables) {
    const auto &[content, rows] = tables.at(name);
    write_file(out_dir / table_file_name(name), content);
    TableInfo info{std::string(name), rows, sha256_hex(content)};
    manifest_json["tables"][info.name] = {{"rows", info.rows}, {"sha256", info.sha256}};
    manifest.tables.push_back(std::move(info));
  }
  write_file(out_dir / kManifestFile, manifest_json.dump(2) + "\n");
  return manifest;
}

ReleaseContents load_release(const std::filesystem::path &dir) {
  ReleaseContents release;
  json manifest_json;
  try {
    manifest_json = json::parse(read_file(dir / kManifestFile));
    release.manifest.label = manifest_json.at("label").get<std::string>();
    release.manifest.timestamp = manifest_json.at("timestamp").get<std::string>();
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kMalformedRelease, std::string("manifest: ") + e.what());
  }

  std::map<std::string_view, std::string> contents;
  for (std::string_view name : kReleaseTables) {
    std::string content = read_file(dir / table_file_name(name));
    TableInfo info;
    try {
      const json &entry = manifest_json.at("tables").at(std::string(name));
      info = {std::string(name), entry.at("rows").get<size_t>(), entry.at("sha256").get<std::string>()};
    } catch (const json::exception &e) {
      throw Error(ErrorCode::kMalformedRelease, "manifest entry for " + std::string(name) + ": " + e.what());
    }
    if (sha256_hex(content) != info.sha256) {
      throw Error(ErrorCode::kChecksumMismatch, table_file_name(name) + " does not match the manifest");
    }
    size_t rows = static_cast<size_t>(std::count(content.begin(), content.end(), '\n'));
    if (rows != info.rows) throw Error(ErrorCode::kMalformedRelease, "row count mismatch in " + std::string(name));
    release.manifest.tables.push_back(std::move(info));
    contents[name] = std::move(content);
  }

  Vocabulary &vocab = release.vocab;

  for (const auto &row : parse_table(contents["MSOURCES"], "MSOURCES", 3)) {
    SourceRegistryEntry entry;
    entry.source_abbr = row[0];
    entry.version = row[1];
    entry.precedence_rank = static_cast<int>(parse_serial_value(row[2], "precedence rank"));
    if (row.size() > 3) entry.tty_ranks = parse_tty_ranks(row[3]);
    try {
      vocab.registry().register_source(std::move(entry));
    } catch (const Error &e) {
      throw Error(ErrorCode::kInvariantViolation, e.what());
    }
  }

  std::vector<SemanticTypeNode> nodes;
  for (const auto &row : parse_table(contents["MTYPES"], "MTYPES", 4)) {
    SemanticTypeNode node;
    node.mtid = parse_id(row[0], IdKind::kType);
    node.label = row[1];
    node.source_of_label = row[2];
    if (!row[3].empty()) {
      for (const std::string &parent : split(row[3], ',')) node.parents.insert(parse_id(parent, IdKind::kType));
    }
    nodes.push_back(std::move(node));
  }
  release.hierarchy = SemanticNetwork::restore(nodes);

  // Group atoms by concept, keeping file order.
  std::map<uint32_t, std::pair<Concept, std::vector<Atom>>> grouped;
  std::map<uint32_t, int> preferred_flags;
  for (const auto &row : parse_table(contents["MCONSO"], "MCONSO", 7)) {
    Identifier mcid = parse_id(row[0], IdKind::kConcept);
    Atom atom;
    atom.maid = parse_id(row[1], IdKind::kAtom);
    atom.term = row[2];
    atom.source_abbr = row[3];
    atom.code = row[4];
    atom.tty = row[5];
    if (row.size() > 7) atom.language = row[7];
    if (row.size() > 8) atom.species = row[8];
    if (vocab.registry().find(atom.source_abbr) == nullptr) {
      throw Error(ErrorCode::kDanglingReference, atom.maid.str() + " names unregistered source " + atom.source_abbr);
    }
    auto &[c, atoms] = grouped[mcid.serial];
    c.mcid = mcid;
    if (row[6] == "P") {
      c.preferred = atom.maid;
      ++preferred_flags[mcid.serial];
    } else if (row[6] != "S") {
      throw Error(ErrorCode::kMalformedRelease, atom.maid.str() + " has flag '" + row[6] + "'");
    }
    atoms.push_back(std::move(atom));
  }
  for (const auto &[serial, entry] : grouped) {
    if (preferred_flags[serial] != 1) {
      throw Error(ErrorCode::kInvariantViolation,
                  entry.first.mcid.str() + " has " + std::to_string(preferred_flags[serial]) + " P rows");
    }
  }

  for (const auto &row : parse_table(contents["MSTY"], "MSTY", 2)) {
    Identifier mcid = parse_id(row[0], IdKind::kConcept);
    Identifier mtid = parse_id(row[1], IdKind::kType);
    auto it = grouped.find(mcid.serial);
    if (it == grouped.end()) throw Error(ErrorCode::kDanglingReference, "MSTY concept " + mcid.str() + " not in MCONSO");
    if (release.hierarchy.find(mtid) == nullptr) {
      throw Error(ErrorCode::kDanglingReference, "MSTY type " + mtid.str() + " not in MTYPES");
    }
    it->second.first.type_links.insert(mtid);
  }

  for (const auto &[serial, entry] : grouped) {
    try {
      vocab.restore_concept(entry.first, entry.second);
    } catch (const Error &e) {
      throw Error(ErrorCode::kInvariantViolation, e.what());
    }
  }

  for (const auto &row : parse_table(contents["MCOUNTERS"], "MCOUNTERS", 2)) {
    uint32_t value = parse_serial_value(row[1], "counter");
    IdKind kind;
    if (row[0] == "MC") {
      kind = IdKind::kConcept;
    } else if (row[0] == "MA") {
      kind = IdKind::kAtom;
    } else if (row[0] == "MT") {
      kind = IdKind::kType;
    } else {
      throw Error(ErrorCode::kMalformedRelease, "unknown counter '" + row[0] + "'");
    }
    try {
      vocab.counters().set_next(kind, value);
    } catch (const Error &e) {
      throw Error(ErrorCode::kInvariantViolation, e.what());
    }
  }
  for (const auto &[serial, node] : release.hierarchy.nodes()) {
    if (serial >= vocab.counters().next(IdKind::kType)) {
      throw Error(ErrorCode::kInvariantViolation, "type counter does not exceed " + node.mtid.str());
    }
  }

  std::vector<std::string> problems = vocab.check_invariants();
  if (!problems.empty()) throw Error(ErrorCode::kInvariantViolation, problems.front());
  return release;
}

}  // namespace termforge
