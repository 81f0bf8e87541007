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

#include <algorithm>
#include <charconv>
#include <fstream>
#include <unordered_map>

#include "termforge/error.h"
#include "termforge/text.h"

namespace termforge {
namespace {

std::vector<std::string> parse_list(std::string_view value) {
  std::vector<std::string> out;
  for (const std::string &item : split(value, ',')) {
    std::string_view trimmed = trim(item);
    if (!trimmed.empty()) out.emplace_back(trimmed);
  }
  return out;
}

// `key:value` pairs; the last colon separates so keys may contain colons.
std::map<std::string, std::string> parse_map(const std::string &key, std::string_view value) {
  std::map<std::string, std::string> out;
  for (const std::string &item : parse_list(value)) {
    size_t colon = item.rfind(':');
    if (colon == std::string::npos) throw Error(ErrorCode::kInvalidConfig, key + ": expected key:value in '" + item + "'");
    std::string k(trim(std::string_view(item).substr(0, colon)));
    std::string v(trim(std::string_view(item).substr(colon + 1)));
    if (k.empty() || v.empty()) throw Error(ErrorCode::kInvalidConfig, key + ": empty side in '" + item + "'");
    out[k] = v;
  }
  return out;
}

int parse_int(const std::string &key, std::string_view value) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(ErrorCode::kInvalidConfig, key + ": not an integer: '" + std::string(value) + "'");
  }
  return out;
}

std::string cell_value(std::string_view raw) {
  std::string_view cell = trim(raw);
  if (cell.size() >= 2 && cell.front() == '"' && cell.back() == '"') cell = trim(cell.substr(1, cell.size() - 2));
  return std::string(cell);
}

std::string default_name_tty(SourceFormat format) {
  return format == SourceFormat::kGeneTable ? "SYM" : "PT";
}

std::string default_type_parent(SourceFormat format) {
  switch (format) {
    case SourceFormat::kGeneTable: return "Gene";
    case SourceFormat::kVariantTable: return "Mutation";
    case SourceFormat::kConceptTermTable: return "";
  }
  return "";
}

}  // namespace

SourceRegistryEntry SourceAdapterConfig::registry_entry() const {
  return {source_abbr, version, precedence_rank, tty_ranks};
}

SourceAdapterConfig SourceAdapterConfig::parse(std::istream &in) {
  SourceAdapterConfig config;
  bool has_type_parent = false;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    size_t eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidConfig, "line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key(trim(text.substr(0, eq)));
    std::string_view value = trim(text.substr(eq + 1));
    if (key == "source_abbr") {
      config.source_abbr = value;
    } else if (key == "version") {
      config.version = value;
    } else if (key == "precedence_rank") {
      config.precedence_rank = parse_int(key, value);
    } else if (key == "tty_ranks") {
      for (const auto &[tty, rank] : parse_map(key, value)) config.tty_ranks[tty] = parse_int(key, rank);
    } else if (key == "format") {
      if (value == "concept_term_table") {
        config.format = SourceFormat::kConceptTermTable;
      } else if (value == "gene_table") {
        config.format = SourceFormat::kGeneTable;
      } else if (value == "variant_table") {
        config.format = SourceFormat::kVariantTable;
      } else {
        throw Error(ErrorCode::kInvalidConfig, "unknown format '" + std::string(value) + "'");
      }
    } else if (key == "code_column") {
      config.code_column = value;
    } else if (key == "name_column") {
      config.name_column = value;
    } else if (key == "synonym_columns") {
      config.synonym_columns = parse_list(value);
    } else if (key == "synonym_delimiter") {
      config.synonym_delimiter = value;
    } else if (key == "tty_column") {
      config.tty_column = value;
    } else if (key == "tty_map") {
      config.tty_map = parse_map(key, value);
    } else if (key == "type_column") {
      config.type_column = value;
    } else if (key == "type_map") {
      config.type_map = parse_map(key, value);
    } else if (key == "default_type") {
      config.default_type = std::string(value);
    } else if (key == "type_parent") {
      config.type_parent = value;
      has_type_parent = true;
    } else if (key == "language_column") {
      config.language_column = value;
    } else if (key == "species_column") {
      config.species_column = value;
    } else if (key == "default_language") {
      config.default_language = value;
    } else if (key == "default_species") {
      config.default_species = value;
    } else if (key == "allowed_languages") {
      for (std::string &tag : parse_list(value)) config.allowed_languages.insert(std::move(tag));
    } else if (key == "allowed_species") {
      for (std::string &tag : parse_list(value)) config.allowed_species.insert(std::move(tag));
    } else {
      throw Error(ErrorCode::kInvalidConfig, "unknown key '" + key + "'");
    }
  }
  if (!has_type_parent) config.type_parent = default_type_parent(config.format);
  if (config.source_abbr.empty()) throw Error(ErrorCode::kInvalidConfig, "source_abbr is required");
  if (config.precedence_rank <= 0) throw Error(ErrorCode::kInvalidConfig, "precedence_rank must be positive");
  if (config.code_column.empty() || config.name_column.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "code_column and name_column are required");
  }
  if (config.synonym_delimiter.empty()) throw Error(ErrorCode::kInvalidConfig, "synonym_delimiter is empty");
  return config;
}

SourceAdapterConfig SourceAdapterConfig::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIOFailure, "cannot read adapter config " + path.string());
  return parse(in);
}

ParseResult parse_source(std::istream &in, const SourceAdapterConfig &config) {
  ParseResult result;
  std::string line;
  size_t line_no = 0;

  // Header.
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    for (const std::string &cell : split(line, '|')) header.push_back(cell_value(cell));
    break;
  }
  if (header.empty()) throw Error(ErrorCode::kEmptyFile, "no header row");

  std::unordered_map<std::string, size_t> columns;
  for (size_t i = 0; i < header.size(); ++i) columns.emplace(header[i], i);
  auto column = [&](const std::string &name) -> std::optional<size_t> {
    if (name.empty()) return std::nullopt;
    auto it = columns.find(name);
    if (it == columns.end()) throw Error(ErrorCode::kMissingColumn, "column '" + name + "' not in header");
    return it->second;
  };
  size_t code_col = *column(config.code_column);
  size_t name_col = *column(config.name_column);
  std::vector<std::pair<std::string, size_t>> synonym_cols;
  for (const std::string &name : config.synonym_columns) synonym_cols.emplace_back(name, *column(name));
  std::optional<size_t> tty_col = column(config.tty_column);
  std::optional<size_t> type_col = column(config.type_column);
  std::optional<size_t> language_col = column(config.language_column);
  std::optional<size_t> species_col = column(config.species_column);

  auto mapped_tty = [&](const std::string &key, const std::string &fallback) {
    auto it = config.tty_map.find(key);
    return it == config.tty_map.end() ? fallback : it->second;
  };

  std::unordered_map<std::string, size_t> group_of;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    ++result.data_rows;

    std::vector<std::string> cells = split(line, '|');
    if (cells.size() != header.size()) {
      result.malformed.push_back({line_no, "expected " + std::to_string(header.size()) + " cells, found " +
                                               std::to_string(cells.size())});
      continue;
    }
    for (std::string &cell : cells) cell = cell_value(cell);
    const std::string &code = cells[code_col];
    const std::string &name = cells[name_col];
    if (code.empty()) {
      result.malformed.push_back({line_no, "missing code"});
      continue;
    }
    if (name.empty()) {
      result.malformed.push_back({line_no, "missing name"});
      continue;
    }

    std::string name_tty;
    if (tty_col) {
      const std::string &raw = cells[*tty_col];
      name_tty = mapped_tty(raw, raw);
      if (name_tty.empty()) {
        result.malformed.push_back({line_no, "missing term type"});
        continue;
      }
    } else {
      name_tty = mapped_tty(config.name_column, default_name_tty(config.format));
    }

    std::string language = language_col && !cells[*language_col].empty() ? cells[*language_col]
                                                                           : config.default_language;
    std::string species = species_col && !cells[*species_col].empty() ? cells[*species_col]
                                                                       : config.default_species;

    auto [it, inserted] = group_of.emplace(code, result.concepts.size());
    if (inserted) {
      SourceConcept sc;
      sc.source_abbr = config.source_abbr;
      sc.code = code;
      result.concepts.push_back(std::move(sc));
    }
    SourceConcept &sc = result.concepts[it->second];

    sc.terms.push_back({name, name_tty, language, species});
    ++result.terms_parsed;
    for (const auto &[col_name, col] : synonym_cols) {
      std::string tty = mapped_tty(col_name, "SY");
      std::string_view cell = cells[col];
      size_t start = 0;
      while (start <= cell.size()) {
        size_t pos = cell.find(config.synonym_delimiter, start);
        if (pos == std::string_view::npos) pos = cell.size();
        std::string synonym = cell_value(cell.substr(start, pos - start));
        if (!synonym.empty()) {
          sc.terms.push_back({synonym, tty, language, species});
          ++result.terms_parsed;
        }
        start = pos + config.synonym_delimiter.size();
      }
    }

    if (type_col && !cells[*type_col].empty()) {
      const std::string &raw = cells[*type_col];
      std::string label;
      if (auto mapped = config.type_map.find(raw); mapped != config.type_map.end()) {
        label = mapped->second;
      } else if (!config.type_parent.empty()) {
        label = raw;
      } else {
        ++result.unmapped_types[raw];
      }
      if (!label.empty() && std::find(sc.type_labels.begin(), sc.type_labels.end(), label) == sc.type_labels.end()) {
        sc.type_labels.push_back(label);
      }
    }
  }

  if (!config.default_type.empty()) {
    for (SourceConcept &sc : result.concepts) {
      if (sc.type_labels.empty()) sc.type_labels.push_back(config.default_type);
    }
  }

  if (result.data_rows == 0) throw Error(ErrorCode::kEmptyFile, "no data rows");
  if (result.malformed.size() * 10 > result.data_rows) {
    throw Error(ErrorCode::kMalformedRows, std::to_string(result.malformed.size()) + " of " +
                                               std::to_string(result.data_rows) + " rows are malformed");
  }
  return result;
}

ParseResult parse_source(const std::filesystem::path &path, const SourceAdapterConfig &config) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIOFailure, "cannot read source file " + path.string());
  return parse_source(in, config);
}

FilterResult scope_filter(const SourceConcept &sc, const SourceAdapterConfig &config) {
  FilterResult result;
  SourceConcept kept = sc;
  kept.terms.clear();
  bool any_language = false;
  bool any_species = false;
  size_t species_failures = 0;
  for (const SourceTerm &term : sc.terms) {
    bool language_ok = config.allowed_languages.empty() || config.allowed_languages.count(term.language) != 0;
    bool species_ok = config.allowed_species.empty() || config.allowed_species.count(term.species) != 0;
    if (language_ok && species_ok) {
      kept.terms.push_back(term);
      continue;
    }
    ++result.terms_dropped;
    any_language = any_language || !language_ok;
    any_species = any_species || !species_ok;
    species_failures += !species_ok;
  }
  if (kept.terms.empty() && species_failures == sc.terms.size() && !sc.terms.empty()) {
    result.reasons.push_back("species");
  } else {
    if (any_language) result.reasons.push_back("language");
    if (any_species) result.reasons.push_back("species");
  }
  if (!kept.terms.empty()) result.kept = std::move(kept);
  return result;
}

}  // namespace termforge
