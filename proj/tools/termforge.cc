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

// termforge: operator entry point for a controlled-vocabulary store.
//
// Exit status: 0 on success, 1 on an operational error, 2 on a usage error.

#include <csignal>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "httplib.h"
#include "termforge/error.h"
#include "termforge/normalizer.h"
#include "termforge/pipeline.h"
#include "termforge/release.h"
#include "termforge/review_service.h"
#include "termforge/semnet.h"
#include "termforge/source_ingest.h"
#include "termforge/store.h"

namespace {

using termforge::CascadeParams;
using termforge::Error;
using termforge::ErrorCode;
using termforge::Normalizer;
using termforge::Workspace;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string store;
  double theta = 0.6;
  std::vector<double> weights = {0.5, 0.5};
  std::string stopwords;

  CascadeParams cascade() const {
    if (weights.size() != 2) throw UsageError("--weights takes two values: jaccard,edit");
    CascadeParams params;
    params.theta = theta;
    params.weights = {weights[0], weights[1]};
    try {
      params.validate();
    } catch (const Error &e) {
      throw UsageError(e.what());
    }
    return params;
  }

  Normalizer normalizer() const {
    return stopwords.empty() ? Normalizer() : Normalizer::from_stopword_file(stopwords);
  }

  const std::string &require_store() const {
    if (store.empty()) throw UsageError("no store given: pass --store or set TERMFORGE_STORE");
    return store;
  }
};

httplib::Server *g_server = nullptr;

void handle_signal(int) {
  if (g_server != nullptr) g_server->stop();
}

int run_init(const RunConfig &config) {
  const std::string &dir = config.require_store();
  termforge::StoreLock lock(dir);
  if (termforge::store_exists(dir)) throw Error(ErrorCode::kAlreadyInitialized, dir + " already holds a store");
  Workspace ws = Workspace::create(config.normalizer());
  termforge::save_store(ws, dir);
  std::cout << "initialized " << dir << " with " << ws.hierarchy.nodes().size() << " semantic types\n";
  return kExitOk;
}

int run_ingest(const RunConfig &config, const std::string &config_path, const std::string &data_path) {
  const std::string &dir = config.require_store();
  CascadeParams params = config.cascade();
  termforge::StoreLock lock(dir);
  Workspace ws = termforge::open_store(dir, config.normalizer());
  termforge::SourceAdapterConfig adapter = termforge::SourceAdapterConfig::load(config_path);
  termforge::ParseResult parsed = termforge::parse_source(data_path, adapter);
  termforge::IngestSummary summary = termforge::ingest_source(ws, adapter, parsed, params);
  termforge::save_store(ws, dir);
  termforge::append_run_log(dir, summary.log);

  std::cout << "source concepts: " << summary.source_concepts << "\n"
            << "merged: " << summary.merged << "\n"
            << "new concepts: " << summary.new_concepts << "\n"
            << "pending review: " << summary.pending << "\n"
            << "already pending: " << summary.already_pending << "\n"
            << "atoms added: " << summary.atoms_added << "\n"
            << "duplicates: " << summary.duplicates << "\n"
            << "conflicts: " << summary.conflicts << "\n"
            << "untyped: " << summary.untyped << "\n"
            << "dropped concepts: " << summary.dropped_concepts << "\n"
            << "filtered terms: " << summary.filtered_terms << "\n"
            << "malformed rows: " << summary.malformed_rows << "\n";
  for (const auto &row : parsed.malformed) {
    std::cerr << data_path << ":" << row.line << ": skipped: " << row.reason << "\n";
  }
  return kExitOk;
}

int run_serve(const RunConfig &config, int port, const std::string &host, const std::string &ui_dir) {
  const std::string &dir = config.require_store();
  CascadeParams params = config.cascade();
  termforge::StoreLock lock(dir);
  Workspace ws = termforge::open_store(dir, config.normalizer());
  termforge::ReviewService service(ws, params, [&dir](const Workspace &w) { termforge::save_store(w, dir); });
  httplib::Server server;
  service.mount(server, ui_dir);
  g_server = &server;
  std::signal(SIGINT, handle_signal);
  std::signal(SIGTERM, handle_signal);
  std::cout << "review service on http://" << host << ":" << port << "/ (" << ws.reviews.open_count()
            << " open)" << std::endl;
  if (!server.listen(host, port)) throw Error(ErrorCode::kIOFailure, "cannot listen on port " + std::to_string(port));
  g_server = nullptr;
  return kExitOk;
}

int run_export(const RunConfig &config, const std::string &label, const std::string &out_dir) {
  const std::string &dir = config.require_store();
  termforge::StoreLock lock(dir);
  Workspace ws = termforge::open_store(dir, config.normalizer());
  termforge::ReleaseManifest manifest =
      termforge::export_release(ws.vocab, ws.hierarchy, label, out_dir, termforge::utc_now());
  for (const auto &table : manifest.tables) {
    std::cout << table.name << "\t" << table.rows << "\t" << table.sha256 << "\n";
  }
  return kExitOk;
}

int run_load(const RunConfig &config, const std::string &release_dir, bool force) {
  const std::string &dir = config.require_store();
  termforge::StoreLock lock(dir);
  if (termforge::store_exists(dir) && !force) {
    throw Error(ErrorCode::kAlreadyInitialized, dir + " already holds a store; use --force to replace it");
  }
  termforge::ReleaseContents release = termforge::load_release(release_dir);
  Workspace ws;
  ws.vocab = std::move(release.vocab);
  ws.hierarchy = std::move(release.hierarchy);
  termforge::save_store(ws, dir);
  std::cout << "loaded release '" << release.manifest.label << "': " << ws.vocab.concept_count() << " concepts, "
            << ws.vocab.atom_count() << " atoms\n";
  return kExitOk;
}

int run_stats(const RunConfig &config) {
  const std::string &dir = config.require_store();
  termforge::StoreLock lock(dir);
  Workspace ws = termforge::open_store(dir, config.normalizer());
  termforge::CoverageReport report = termforge::coverage_report(ws.vocab, ws.hierarchy);
  for (const auto &row : report.rows) std::cout << row.label << "\t" << row.count << "\n";
  std::cout << "Untyped\t" << report.untyped << "\n";
  return kExitOk;
}

int run_normalize(const RunConfig &config, const std::string &text) {
  std::cout << config.normalizer().normalize(text).joined << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Controlled-vocabulary integration engine"};
  app.require_subcommand(1);

  RunConfig config;
  app.add_option("--store", config.store, "Store directory")->envname("TERMFORGE_STORE");
  app.add_option("--theta", config.theta, "Fuzzy acceptance threshold in [0,1]")->check(CLI::Range(0.0, 1.0));
  app.add_option("--weights", config.weights, "Fuzzy weights: jaccard,edit (sum to 1)")->delimiter(',')->expected(2);
  app.add_option("--stopwords", config.stopwords, "Stop-word override file")->check(CLI::ExistingFile);

  auto *init = app.add_subcommand("init", "Create a store with the top-level semantic types");

  std::string adapter_path;
  std::string data_path;
  auto *ingest = app.add_subcommand("ingest", "Parse, filter and integrate a source file");
  ingest->add_option("config", adapter_path, "Adapter config")->required()->check(CLI::ExistingFile);
  ingest->add_option("file", data_path, "Source data file")->required()->check(CLI::ExistingFile);

  int port = 8080;
  std::string host = "127.0.0.1";
  std::string ui_dir;
  auto *serve = app.add_subcommand("review-serve", "Serve the review API and curation UI");
  serve->add_option("--port", port, "Listen port")->check(CLI::Range(1, 65535));
  serve->add_option("--host", host, "Listen address");
  serve->add_option("--ui-dir", ui_dir, "Built curation UI bundle");

  std::string label;
  std::string out_dir;
  auto *export_cmd = app.add_subcommand("export", "Write a versioned release");
  export_cmd->add_option("--label", label, "Release label")->required();
  export_cmd->add_option("dir", out_dir, "Output directory")->required();

  std::string release_dir;
  bool force = false;
  auto *load = app.add_subcommand("load", "Initialize the store from a release directory");
  load->add_option("dir", release_dir, "Release directory")->required()->check(CLI::ExistingDirectory);
  load->add_flag("--force", force, "Replace an existing store");

  auto *stats = app.add_subcommand("stats", "Print concept counts per top semantic type");

  std::string text;
  auto *normalize = app.add_subcommand("normalize", "Print the normalized form of a string");
  normalize->add_option("string", text, "Input text")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*init) return run_init(config);
    if (*ingest) return run_ingest(config, adapter_path, data_path);
    if (*serve) return run_serve(config, port, host, ui_dir);
    if (*export_cmd) return run_export(config, label, out_dir);
    if (*load) return run_load(config, release_dir, force);
    if (*stats) return run_stats(config);
    if (*normalize) return run_normalize(config, text);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
