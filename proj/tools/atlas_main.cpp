#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "atlas/analytics.hpp"
#include "atlas/api.hpp"
#include "atlas/error.hpp"
#include "atlas/export.hpp"
#include "atlas/inventory.hpp"
#include "atlas/keywords.hpp"
#include "atlas/layout.hpp"
#include "atlas/params.hpp"
#include "atlas/snapshot.hpp"
#include "atlas/svg.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw atlas::Error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw atlas::Error("cannot write " + path);
}

// "--group-by" -> "ATLAS_GROUP_BY"
std::string env_name(const std::string& flag) {
  std::string name = "ATLAS_";
  for (char c : flag.substr(flag.find_first_not_of('-'))) {
    name += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return name;
}

template <class T>
CLI::Option* option(CLI::App* app, const std::string& flag, T& value, const std::string& description) {
  return app->add_option(flag, value, description)->envname(env_name(flag));
}

atlas::Snapshot load(const std::string& corpus_path, const std::string& network_path) {
  return atlas::load_snapshot(read_file(corpus_path), read_file(network_path), corpus_path, network_path);
}

struct IngestArgs {
  std::vector<std::string> registers;
  std::vector<std::string> operations;
  std::string schema;
  std::string out;
};

int run_ingest(const IngestArgs& args) {
  atlas::SchemaConfig schema;
  if (!args.schema.empty()) schema = atlas::SchemaConfig::parse(read_file(args.schema));

  std::vector<atlas::InventoryPart> parts;
  std::vector<atlas::Issue> warnings;
  auto add = [&](const std::string& path, atlas::ItemKind kind) {
    std::string tag = fs::path(path).stem().string();
    for (const auto& part : parts) {
      if (part.tag == tag) throw atlas::InvalidArgument("two inputs share the file name '" + tag + "'");
    }
    parts.push_back(atlas::load_inventory(read_file(path), kind, schema, std::move(tag), path, &warnings));
  };
  for (const auto& path : args.registers) add(path, atlas::ItemKind::AdministrativeRegister);
  for (const auto& path : args.operations) add(path, atlas::ItemKind::StatisticalOperation);

  const atlas::Corpus corpus = atlas::merge_inventories(std::move(parts));
  const atlas::ValidationReport report = atlas::validate_corpus(corpus);
  for (const auto& w : warnings) std::cerr << "warning: " << w.locator << ": " << w.message << '\n';
  for (const auto& w : report.warnings) std::cerr << "warning: " << w.locator << ": " << w.message << '\n';
  for (const auto& e : report.errors) std::cerr << "error: " << e.locator << ": " << e.message << '\n';
  if (!report.usable()) return 1;

  write_file(args.out, atlas::export_corpus_json(corpus));
  std::cerr << "ingested " << corpus.count(atlas::ItemKind::AdministrativeRegister) << " registers and "
            << corpus.count(atlas::ItemKind::StatisticalOperation) << " operations\n";
  return 0;
}

struct DeriveArgs {
  std::string corpus;
  std::string config;
  std::string exclusions;
  std::optional<std::size_t> threshold;
  std::optional<std::size_t> min_length;
  std::string fields;
  std::string out;
};

int run_derive(const DeriveArgs& args) {
  atlas::Corpus corpus = atlas::import_corpus_json(read_file(args.corpus));
  atlas::DerivationConfig config = atlas::DerivationConfig::defaults();
  if (!args.config.empty()) config = atlas::DerivationConfig::parse(read_file(args.config), config);
  if (!args.exclusions.empty()) config.exclusion_list = atlas::parse_exclusion_list(read_file(args.exclusions));
  if (args.threshold) config.threshold_x = *args.threshold;
  if (args.min_length) config.min_token_length = *args.min_length;
  if (!args.fields.empty()) {
    config = atlas::DerivationConfig::parse("fields_included = " + args.fields, config);
  }

  const atlas::Snapshot snapshot = atlas::build_snapshot(std::move(corpus), std::move(config));
  write_file(args.out, atlas::export_derived_json(snapshot));
  std::cerr << "derived " << snapshot.dictionary.entries.size() << " keywords and " << snapshot.network.links.size()
            << " links\n";
  return 0;
}

struct LayoutArgs {
  std::string kind;
  std::string corpus;
  std::string network;
  std::string keyword;
  std::optional<std::uint64_t> seed;
  std::optional<int> ticks;
  std::optional<double> width;
  std::optional<double> height;
  std::vector<std::string> set;
  std::string svg;
  std::string json;
};

int run_layout(const LayoutArgs& args) {
  const atlas::Snapshot snapshot = load(args.corpus, args.network);

  atlas::SimulationParams params;
  atlas::RadialParams radial;
  for (const auto& assignment : args.set) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw atlas::InvalidArgument("--set expects key=value, got '" + assignment + "'");
    atlas::set_layout_param(params, radial, assignment.substr(0, eq), assignment.substr(eq + 1));
  }
  if (args.seed) params.seed = *args.seed;
  if (args.ticks) params.ticks = *args.ticks;
  if (args.width) params.viewport.width = *args.width;
  if (args.height) params.viewport.height = *args.height;

  atlas::LayoutResult result;
  if (args.kind == "grouped") {
    result = atlas::layout_grouped(snapshot.network, snapshot.assignment, params);
  } else {
    if (args.keyword.empty()) throw atlas::InvalidArgument("radial layout needs --keyword");
    result = atlas::layout_radial(snapshot.corpus, snapshot.network, snapshot.config, args.keyword, params, radial);
  }
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';

  const std::string json = atlas::export_layout_json(result);
  if (!args.json.empty()) write_file(args.json, json);
  if (!args.svg.empty()) write_file(args.svg, atlas::render_layout_svg(result, snapshot.network));
  if (args.json.empty() && args.svg.empty()) std::cout << json;
  return 0;
}

struct SummaryArgs {
  std::string corpus;
  std::string network;
  std::string group_by = "macro";
  std::string order = "natural";
  std::string svg;
  std::string json;
};

int run_summary(const SummaryArgs& args) {
  const auto grouping = atlas::grouping_from_string(args.group_by);
  const auto order = atlas::order_mode_from_string(args.order);

  atlas::ThemeSummary summary;
  if (!args.network.empty()) {
    const atlas::Snapshot snapshot = load(args.corpus, args.network);
    summary = atlas::summarize(snapshot.corpus, grouping, order, &snapshot.assignment);
  } else {
    if (grouping == atlas::Grouping::NewTheme) throw atlas::InvalidArgument("--group-by new needs --network");
    summary = atlas::summarize(atlas::import_corpus_json(read_file(args.corpus)), grouping, order);
  }

  const std::string json = atlas::export_summary_json(summary);
  if (!args.json.empty()) write_file(args.json, json);
  if (!args.svg.empty()) write_file(args.svg, atlas::render_bars_svg(summary));
  if (args.json.empty() && args.svg.empty()) std::cout << json;
  return 0;
}

struct RankArgs {
  std::string corpus;
  std::string network;
  std::string keyword;
  std::size_t limit = 0;
};

int run_rank(const RankArgs& args) {
  atlas::Corpus corpus;
  atlas::DerivationConfig config = atlas::DerivationConfig::defaults();
  if (!args.network.empty()) {
    atlas::Snapshot snapshot = load(args.corpus, args.network);
    corpus = std::move(snapshot.corpus);
    config = std::move(snapshot.config);
  } else {
    corpus = atlas::import_corpus_json(read_file(args.corpus));
  }

  const std::string term = atlas::query_term(args.keyword, config);
  const auto ranking = atlas::rank_by_keyword(corpus, args.keyword, config);
  std::printf("keyword: %s\n", term.c_str());
  std::printf("%5s  %5s  %-9s  %-16s  %s\n", "rank", "count", "kind", "id", "name");
  std::size_t rank = 0;
  for (const auto& match : ranking) {
    if (args.limit != 0 && rank == args.limit) break;
    ++rank;
    std::printf("%5zu  %5zu  %-9s  %-16s  %s\n", rank, match.count, std::string(atlas::to_string(match.kind)).c_str(),
                match.id.c_str(), match.name.c_str());
  }
  if (ranking.empty()) std::printf("(no matches)\n");
  return 0;
}

struct ServeArgs {
  std::string corpus;
  std::string network;
  atlas::ServerOptions server;
};

std::atomic<bool> g_reload{false};
std::atomic<bool> g_shutdown{false};

int run_serve(const ServeArgs& args) {
  auto service = std::make_shared<atlas::ApiService>(std::make_shared<atlas::Snapshot>(load(args.corpus, args.network)));
  atlas::HttpServer server(service, args.server);
  const int port = server.bind();
  std::cerr << "serving on http://" << args.server.host << ':' << port << "/api/ (SIGHUP reloads the snapshot)\n";

  std::signal(SIGHUP, [](int) { g_reload = true; });
  std::signal(SIGINT, [](int) { g_shutdown = true; });
  std::signal(SIGTERM, [](int) { g_shutdown = true; });

  std::atomic<bool> running{true};
  std::thread watcher([&] {
    while (running) {
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
      if (g_shutdown.exchange(false)) {
        server.stop();
        return;
      }
      if (g_reload.exchange(false)) {
        try {
          service->swap_snapshot(std::make_shared<atlas::Snapshot>(load(args.corpus, args.network)));
          std::cerr << "snapshot reloaded\n";
        } catch (const std::exception& e) {
          std::cerr << "reload failed, keeping the current snapshot: " << e.what() << '\n';
        }
      }
    }
  });
  server.listen();
  running = false;
  watcher.join();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"atlas: thematic classification and layouts for metadata inventories"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "atlas 0.3.0");

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Merge register/operation CSV inventories into a corpus file");
  option(ingest_cmd, "--registers", ingest.registers, "Administrative register CSV files");
  option(ingest_cmd, "--operations", ingest.operations, "Statistical operation CSV files");
  option(ingest_cmd, "--schema", ingest.schema, "Column mapping (name/macro_theme/sub_theme = header)")
      ->check(CLI::ExistingFile);
  option(ingest_cmd, "--out", ingest.out, "Corpus JSON to write")->required();

  DeriveArgs derive;
  auto* derive_cmd = app.add_subcommand("derive", "Build the keyword dictionary, network and clusters");
  option(derive_cmd, "--corpus", derive.corpus, "Corpus JSON from ingest")->required()->check(CLI::ExistingFile);
  option(derive_cmd, "--config", derive.config, "Derivation config (key = value lines)")->check(CLI::ExistingFile);
  option(derive_cmd, "--exclusions", derive.exclusions, "Exclusion list replacing the bundled one")
      ->check(CLI::ExistingFile);
  option(derive_cmd, "--threshold", derive.threshold, "Keep terms counted more than this many times");
  option(derive_cmd, "--min-length", derive.min_length, "Shortest token kept, in characters");
  option(derive_cmd, "--fields", derive.fields, "Comma-separated fields to count (default: all)");
  option(derive_cmd, "--out", derive.out, "Derived JSON to write")->required();

  LayoutArgs layout;
  auto* layout_cmd = app.add_subcommand("layout", "Compute a grouped treemap or keyword radial layout");
  layout_cmd->add_option("kind", layout.kind, "grouped or radial")
      ->required()
      ->check(CLI::IsMember({"grouped", "radial"}));
  option(layout_cmd, "--corpus", layout.corpus, "Corpus JSON")->required()->check(CLI::ExistingFile);
  option(layout_cmd, "--network", layout.network, "Derived JSON")->required()->check(CLI::ExistingFile);
  option(layout_cmd, "--keyword", layout.keyword, "Query keyword (radial)");
  option(layout_cmd, "--seed", layout.seed, "Simulation seed");
  option(layout_cmd, "--ticks", layout.ticks, "Simulation ticks");
  option(layout_cmd, "--width", layout.width, "Viewport width");
  option(layout_cmd, "--height", layout.height, "Viewport height");
  option(layout_cmd, "--set", layout.set, "Any layout parameter as key=value (see docs/defaults.md)");
  option(layout_cmd, "--svg", layout.svg, "SVG file to write");
  option(layout_cmd, "--json", layout.json, "Layout JSON file to write (stdout when neither output is given)");

  SummaryArgs summary;
  auto* summary_cmd = app.add_subcommand("summary", "Register/operation counts per theme");
  option(summary_cmd, "--corpus", summary.corpus, "Corpus JSON")->required()->check(CLI::ExistingFile);
  option(summary_cmd, "--network", summary.network, "Derived JSON (needed for --group-by new)")
      ->check(CLI::ExistingFile);
  option(summary_cmd, "--group-by", summary.group_by, "macro, sub or new")->capture_default_str();
  option(summary_cmd, "--order", summary.order, "natural, desc_registers, desc_operations or independent")
      ->capture_default_str();
  option(summary_cmd, "--svg", summary.svg, "Bar chart SVG file to write");
  option(summary_cmd, "--json", summary.json, "Summary JSON file to write (stdout when neither output is given)");

  RankArgs rank;
  auto* rank_cmd = app.add_subcommand("rank", "Items ranked by keyword occurrences");
  option(rank_cmd, "--corpus", rank.corpus, "Corpus JSON")->required()->check(CLI::ExistingFile);
  option(rank_cmd, "--network", rank.network, "Derived JSON; its derivation config is used when given")
      ->check(CLI::ExistingFile);
  option(rank_cmd, "--keyword", rank.keyword, "Query keyword")->required();
  option(rank_cmd, "--limit", rank.limit, "Show at most this many rows (0 = all)");

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the read-only HTTP API");
  option(serve_cmd, "--corpus", serve.corpus, "Corpus JSON")->required();
  option(serve_cmd, "--network", serve.network, "Derived JSON")->required();
  option(serve_cmd, "--host", serve.server.host, "Bind address")->capture_default_str();
  option(serve_cmd, "--port", serve.server.port, "Port (0 picks a free one)")->capture_default_str();
  option(serve_cmd, "--cors-origin", serve.server.cors_origin, "Access-Control-Allow-Origin value")
      ->capture_default_str();
  option(serve_cmd, "--static", serve.server.static_dir, "Directory of UI assets served at /");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest_cmd) {
      if (ingest.registers.empty() && ingest.operations.empty()) {
        throw atlas::InvalidArgument("give at least one --registers or --operations file");
      }
      return run_ingest(ingest);
    }
    if (*derive_cmd) return run_derive(derive);
    if (*layout_cmd) return run_layout(layout);
    if (*summary_cmd) return run_summary(summary);
    if (*rank_cmd) return run_rank(rank);
    if (*serve_cmd) return run_serve(serve);
  } catch (const std::exception& e) {
    std::cerr << "atlas: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
