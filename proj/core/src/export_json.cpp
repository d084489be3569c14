#include <json.hpp>

#include "atlas/error.hpp"
#include "atlas/export.hpp"

namespace atlas {

using Json = nlohmann::ordered_json;

namespace {

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse_document(std::string_view text, std::string_view expected_schema) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string(expected_schema), 0, e.what());
  }
  if (!doc.is_object() || !doc.contains("schema") || !doc["schema"].is_string()) {
    throw ParseError(std::string(expected_schema), 0, "missing schema field");
  }
  const auto schema = doc["schema"].get<std::string>();
  if (schema != expected_schema) {
    throw ParseError(std::string(expected_schema), 0,
                     "schema version mismatch: expected " + std::string(expected_schema) + ", got " + schema);
  }
  return doc;
}

// Wraps nlohmann type/key errors so callers only see atlas errors.
template <typename Fn>
auto guarded(std::string_view schema, Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(schema), 0, e.what());
  }
}

Json rect_json(const Rect& r) {
  return Json{{"x", r.x}, {"y", r.y}, {"width", r.width}, {"height", r.height}};
}

}  // namespace

std::string export_corpus_json(const Corpus& corpus) {
  Json doc;
  doc["schema"] = kCorpusSchema;
  doc["schema_columns"] = corpus.schema;
  Json sources = Json::array();
  for (const auto& s : corpus.source_files) {
    sources.push_back({{"tag", s.tag}, {"path", s.path}, {"kind", to_string(s.kind)}, {"row_count", s.row_count}});
  }
  doc["source_files"] = std::move(sources);
  Json items = Json::array();
  for (const auto& item : corpus.items) {
    Json metadata = Json::array();
    for (const auto& [column, value] : item.metadata) metadata.push_back({{"column", column}, {"value", value}});
    items.push_back({{"id", item.id},
                     {"name", item.name},
                     {"kind", to_string(item.kind)},
                     {"macro_theme", item.macro_theme},
                     {"sub_theme", item.sub_theme},
                     {"metadata", std::move(metadata)}});
  }
  doc["items"] = std::move(items);
  return dump(doc);
}

Corpus import_corpus_json(std::string_view text) {
  const Json doc = parse_document(text, kCorpusSchema);
  return guarded(kCorpusSchema, [&] {
    Corpus corpus;
    corpus.schema = doc.at("schema_columns").get<std::vector<std::string>>();
    for (const auto& s : doc.at("source_files")) {
      corpus.source_files.push_back({s.at("tag").get<std::string>(), s.at("path").get<std::string>(),
                                     item_kind_from_string(s.at("kind").get<std::string>()),
                                     s.at("row_count").get<std::size_t>()});
    }
    for (const auto& j : doc.at("items")) {
      InventoryItem item;
      item.id = j.at("id").get<std::string>();
      item.name = j.at("name").get<std::string>();
      item.kind = item_kind_from_string(j.at("kind").get<std::string>());
      item.macro_theme = j.at("macro_theme").get<std::string>();
      item.sub_theme = j.at("sub_theme").get<std::string>();
      for (const auto& m : j.at("metadata")) {
        item.metadata.emplace_back(m.at("column").get<std::string>(), m.at("value").get<std::string>());
      }
      corpus.items.push_back(std::move(item));
    }
    return corpus;
  });
}

std::string export_network_json(const ThematicNetwork& network, const ClusterAssignment& assignment) {
  Json doc;
  doc["schema"] = kNetworkSchema;
  Json nodes = Json::array();
  for (const auto& node : network.nodes) {
    Json j;
    j["id"] = node.id;
    j["role"] = to_string(node.role);
    if (node.role == NodeRole::Item) {
      j["kind"] = to_string(node.kind);
      j["name"] = node.label;
    } else {
      j["term"] = node.label;
      j["frequency"] = node.frequency;
    }
    j["theme"] = assignment.theme_of(node.id);
    nodes.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  Json links = Json::array();
  for (const auto& link : network.links) {
    links.push_back({{"source", link.item_id}, {"target", link.keyword_id}, {"weight", link.weight}});
  }
  doc["links"] = std::move(links);
  Json themes = Json::array();
  for (const auto& row : theme_distribution(network, assignment)) {
    themes.push_back({{"theme", row.theme}, {"items", row.items}, {"keywords", row.keywords}});
  }
  doc["themes"] = std::move(themes);
  return dump(doc);
}

NetworkDocument import_network_json(std::string_view text) {
  const Json doc = parse_document(text, kNetworkSchema);
  return guarded(kNetworkSchema, [&] {
    NetworkDocument out;
    for (const auto& j : doc.at("nodes")) {
      Node node;
      node.id = j.at("id").get<std::string>();
      const auto role = j.at("role").get<std::string>();
      if (role == "item") {
        node.role = NodeRole::Item;
        node.kind = item_kind_from_string(j.at("kind").get<std::string>());
        node.label = j.at("name").get<std::string>();
      } else if (role == "keyword") {
        node.role = NodeRole::Keyword;
        node.label = j.at("term").get<std::string>();
        node.frequency = j.at("frequency").get<std::size_t>();
      } else {
        throw ParseError(std::string(kNetworkSchema), 0, "unknown node role '" + role + "'");
      }
      const auto theme = j.at("theme").get<std::string>();
      ++out.assignment.member_counts[theme];
      if (!out.assignment.theme_by_node.emplace(node.id, theme).second) {
        throw ParseError(std::string(kNetworkSchema), 0, "duplicate node id '" + node.id + "'");
      }
      out.network.nodes.push_back(std::move(node));
    }
    for (const auto& j : doc.at("links")) {
      out.network.links.push_back(
          {j.at("source").get<std::string>(), j.at("target").get<std::string>(), j.at("weight").get<std::size_t>()});
    }
    return out;
  });
}

std::string export_dictionary_json(const KeywordDictionary& dictionary) {
  Json doc;
  doc["schema"] = kDictionarySchema;
  doc["config_fingerprint"] = dictionary.config_fingerprint;
  Json entries = Json::array();
  for (const auto& [term, frequency] : dictionary.entries) entries.push_back({{"term", term}, {"frequency", frequency}});
  doc["keywords"] = std::move(entries);
  return dump(doc);
}

KeywordDictionary import_dictionary_json(std::string_view text) {
  const Json doc = parse_document(text, kDictionarySchema);
  return guarded(kDictionarySchema, [&] {
    KeywordDictionary dictionary;
    dictionary.config_fingerprint = doc.at("config_fingerprint").get<std::string>();
    for (const auto& j : doc.at("keywords")) {
      dictionary.entries.emplace(j.at("term").get<std::string>(), j.at("frequency").get<std::size_t>());
    }
    return dictionary;
  });
}

std::string export_derivation_config_json(const DerivationConfig& config) {
  Json doc;
  doc["schema"] = "atlas.derivation-config/1";
  doc["threshold_x"] = config.threshold_x;
  doc["min_token_length"] = config.min_token_length;
  doc["fields_included"] = config.fields_included;
  doc["exclusion_list"] = config.exclusion_list;
  doc["fingerprint"] = config.fingerprint();
  return dump(doc);
}

DerivationConfig import_derivation_config_json(std::string_view text) {
  constexpr std::string_view schema = "atlas.derivation-config/1";
  const Json doc = parse_document(text, schema);
  return guarded(schema, [&] {
    DerivationConfig config;
    config.threshold_x = doc.at("threshold_x").get<std::size_t>();
    config.min_token_length = doc.at("min_token_length").get<std::size_t>();
    config.fields_included = doc.at("fields_included").get<std::vector<std::string>>();
    for (const auto& e : doc.at("exclusion_list")) config.exclusion_list.insert(e.get<std::string>());
    config.validate();
    if (doc.contains("fingerprint") && doc["fingerprint"].get<std::string>() != config.fingerprint()) {
      throw ParseError(std::string(schema), 0, "fingerprint does not match the stored configuration");
    }
    return config;
  });
}

std::string export_layout_json(const LayoutResult& layout) {
  const auto& p = layout.params;
  Json doc;
  doc["schema"] = kLayoutSchema;
  doc["kind"] = to_string(layout.kind);
  doc["viewport"] = {{"width", p.viewport.width}, {"height", p.viewport.height}};
  doc["params"] = {{"seed", p.seed},
                   {"ticks", p.ticks},
                   {"alpha_start", p.alpha_start},
                   {"alpha_min", p.alpha_min},
                   {"alpha_decay", p.alpha_decay},
                   {"velocity_decay", p.velocity_decay},
                   {"repulsion_strength", p.repulsion_strength},
                   {"repulsion_distance_max",
                    std::isfinite(p.repulsion_distance_max) ? Json(p.repulsion_distance_max) : Json(nullptr)},
                   {"link_distance", p.link_distance},
                   {"link_strength_intra", p.link_strength_intra},
                   {"link_strength_inter", p.link_strength_inter},
                   {"collision_radius", p.collision_radius},
                   {"group_gravity", p.group_gravity},
                   {"treemap", p.treemap == TreemapAlgorithm::Squarified ? "squarified" : "slice_and_dice"}};
  doc["center"] = {{"x", layout.center.x}, {"y", layout.center.y}};

  if (layout.kind == LayoutKind::GroupedTreemap) {
    Json cells = Json::array();
    for (const auto& cell : layout.cells) {
      Json j{{"label", cell.label}};
      j.update(rect_json(cell.rect));
      j["weight"] = cell.weight;
      cells.push_back(std::move(j));
    }
    doc["cells"] = std::move(cells);
  }
  if (layout.kind == LayoutKind::Radial) {
    doc["keyword"] = layout.keyword;
    doc["rings"] = {{"view", layout.rings.view},
                    {"inner", layout.rings.inner},
                    {"outer", layout.rings.outer},
                    {"border", layout.rings.border}};
    doc["radial"] = {{"inner_fraction", layout.radial.inner_fraction},
                     {"outer_fraction", layout.radial.outer_fraction},
                     {"border_fraction", layout.radial.border_fraction},
                     {"pull_strength", layout.radial.pull_strength}};
  }
  doc["warnings"] = layout.warnings;
  doc["final_mean_displacement"] = layout.final_mean_displacement;

  Json positions = Json::array();
  for (const auto& node : layout.nodes) {
    Json j{{"id", node.id}, {"role", to_string(node.role)}};
    if (node.role == NodeRole::Item) j["kind"] = to_string(node.kind);
    j["x"] = node.position.x;
    j["y"] = node.position.y;
    if (layout.kind == LayoutKind::GroupedTreemap) j["cell"] = node.cell;
    if (layout.kind == LayoutKind::Radial) {
      j["target_radius"] = node.target_radius;
      j["match_count"] = node.match_count;
    }
    positions.push_back(std::move(j));
  }
  doc["positions"] = std::move(positions);
  return dump(doc);
}

std::string export_summary_json(const ThemeSummary& summary) {
  Json doc;
  doc["schema"] = kSummarySchema;
  doc["grouping"] = to_string(summary.grouping);
  doc["order"] = to_string(summary.order_mode);
  Json rows = Json::array();
  for (const auto& row : summary.rows) {
    rows.push_back({{"bucket", row.bucket}, {"registers", row.registers}, {"operations", row.operations}});
  }
  doc["rows"] = std::move(rows);
  if (summary.order_mode == OrderMode::Independent) {
    auto series = [](const std::vector<SeriesEntry>& entries) {
      Json out = Json::array();
      for (const auto& e : entries) out.push_back({{"bucket", e.bucket}, {"count", e.count}});
      return out;
    };
    doc["registers_sorted"] = series(summary.registers_sorted);
    doc["operations_sorted"] = series(summary.operations_sorted);
  }
  return dump(doc);
}

std::string export_ranking_json(std::string_view term, const std::vector<RankedMatch>& ranking) {
  Json doc;
  doc["schema"] = kRankingSchema;
  doc["keyword"] = term;
  Json matches = Json::array();
  for (const auto& m : ranking) {
    matches.push_back({{"id", m.id}, {"name", m.name}, {"kind", to_string(m.kind)}, {"count", m.count}});
  }
  doc["matches"] = std::move(matches);
  return dump(doc);
}

std::string export_item_detail_json(const ItemDetail& detail) {
  Json doc;
  doc["schema"] = kItemSchema;
  doc["id"] = detail.id;
  doc["name"] = detail.name;
  doc["kind"] = to_string(detail.kind);
  doc["macro_theme"] = detail.macro_theme;
  doc["sub_theme"] = detail.sub_theme;
  doc["new_theme"] = detail.new_theme;
  doc["objective"] = detail.objective;
  Json metadata = Json::array();
  for (const auto& [column, value] : detail.metadata) metadata.push_back({{"column", column}, {"value", value}});
  doc["metadata"] = std::move(metadata);
  Json keywords = Json::array();
  for (const auto& k : detail.keywords) keywords.push_back({{"term", k.term}, {"weight", k.weight}});
  doc["keywords"] = std::move(keywords);
  return dump(doc);
}

std::string export_error_json(int status, std::string_view message) {
  Json doc;
  doc["schema"] = kErrorSchema;
  doc["status"] = status;
  doc["error"] = message;
  return dump(doc);
}

}  // namespace atlas
