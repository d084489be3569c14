#include "atlas/inventory.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>

#include "atlas/csv.hpp"
#include "atlas/error.hpp"
#include "utf8.hpp"

namespace atlas {

std::string_view to_string(ItemKind kind) noexcept {
  return kind == ItemKind::AdministrativeRegister ? "register" : "operation";
}

ItemKind item_kind_from_string(std::string_view text) {
  if (text == "register" || text == "AdministrativeRegister") return ItemKind::AdministrativeRegister;
  if (text == "operation" || text == "StatisticalOperation") return ItemKind::StatisticalOperation;
  throw InvalidArgument("unknown item kind '" + std::string(text) + "'");
}

const std::string* InventoryItem::field(std::string_view column) const noexcept {
  for (const auto& [key, value] : metadata) {
    if (key == column) return &value;
  }
  return nullptr;
}

const InventoryItem* Corpus::find(std::string_view id) const noexcept {
  for (const auto& item : items) {
    if (item.id == id) return &item;
  }
  return nullptr;
}

std::size_t Corpus::count(ItemKind kind) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [kind](const auto& i) { return i.kind == kind; }));
}

SchemaConfig SchemaConfig::parse(std::string_view text) {
  SchemaConfig config;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("<schema>", line_no, "expected key = value");
    const auto key = detail::trim(line.substr(0, eq));
    const std::string value(detail::trim(line.substr(eq + 1)));
    if (key == "name") {
      config.name_column = value;
    } else if (key == "macro_theme") {
      config.macro_theme_column = value;
    } else if (key == "sub_theme") {
      config.sub_theme_column = value;
    } else {
      throw ParseError("<schema>", line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (config.name_column.empty()) throw ParseError("<schema>", 0, "name column must be mapped");
  return config;
}

namespace {

std::vector<InventoryItem> parse_items(std::string_view csv_text, ItemKind kind,
                                       const SchemaConfig& schema, std::string_view source_name,
                                       std::vector<Issue>* warnings,
                                       std::vector<std::string>* header_out) {
  const std::string source(source_name);
  if (schema.name_column.empty()) throw ParseError(source, 0, "schema does not map the name column");
  if (const auto bad = detail::find_invalid_utf8(csv_text)) {
    const auto line = 1 + static_cast<std::size_t>(
                              std::count(csv_text.begin(), csv_text.begin() + static_cast<long>(*bad), '\n'));
    throw ParseError(source, line, "invalid UTF-8");
  }

  auto records = csv::read_records(csv_text, source);
  if (records.empty()) throw ParseError(source, 0, "missing header row");

  const auto& header = records.front().fields;
  auto column_of = [&](const std::string& name) -> std::optional<std::size_t> {
    if (name.empty()) return std::nullopt;
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw ParseError(source, 1, "missing mapped column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const auto name_col = column_of(schema.name_column);
  const auto macro_col = column_of(schema.macro_theme_column);
  const auto sub_col = column_of(schema.sub_theme_column);

  std::vector<InventoryItem> items;
  items.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    auto& record = records[r];
    const bool blank = std::all_of(record.fields.begin(), record.fields.end(),
                                   [](const std::string& f) { return detail::trim(f).empty(); });
    if (blank) {
      if (warnings) {
        warnings->push_back({source + ":" + std::to_string(record.line), "blank row skipped"});
      }
      continue;
    }
    if (record.fields.size() != header.size()) {
      throw ParseError(source, record.line,
                       "expected " + std::to_string(header.size()) + " fields, found " +
                           std::to_string(record.fields.size()));
    }

    InventoryItem item;
    item.id = std::to_string(r);
    item.kind = kind;
    for (std::size_t c = 0; c < header.size(); ++c) {
      auto& cell = record.fields[c];
      if (c == name_col) {
        item.name = std::move(cell);
      } else if (c == macro_col) {
        item.macro_theme = std::move(cell);
      } else if (c == sub_col) {
        item.sub_theme = std::move(cell);
      } else {
        item.metadata.emplace_back(header[c], std::move(cell));
      }
    }
    items.push_back(std::move(item));
  }
  if (header_out) *header_out = header;
  return items;
}

}  // namespace

std::vector<InventoryItem> parse_inventory(std::string_view csv_text, ItemKind kind,
                                           const SchemaConfig& schema, std::string_view source_name,
                                           std::vector<Issue>* warnings) {
  return parse_items(csv_text, kind, schema, source_name, warnings, nullptr);
}

InventoryPart load_inventory(std::string_view csv_text, ItemKind kind, const SchemaConfig& schema,
                             std::string tag, std::string path, std::vector<Issue>* warnings) {
  InventoryPart part;
  part.items = parse_items(csv_text, kind, schema, path, warnings, &part.columns);
  part.tag = std::move(tag);
  part.path = std::move(path);
  part.kind = kind;
  return part;
}

Corpus merge_inventories(std::vector<InventoryPart> parts) {
  Corpus corpus;
  std::unordered_set<std::string> seen;
  std::set<std::string> schema_seen;
  auto add_column = [&](const std::string& column) {
    if (schema_seen.insert(column).second) corpus.schema.push_back(column);
  };
  for (auto& part : parts) {
    corpus.source_files.push_back({part.tag, part.path, part.kind, part.items.size()});
    for (const auto& column : part.columns) add_column(column);
    for (auto& item : part.items) {
      std::string id = part.tag.empty() ? item.id : part.tag + ":" + item.id;
      if (!seen.insert(id).second) {
        throw InvalidArgument("duplicate item id '" + item.id + "' for source tag '" + part.tag + "'");
      }
      for (const auto& entry : item.metadata) add_column(entry.first);
      item.id = std::move(id);
      item.kind = part.kind;
      corpus.items.push_back(std::move(item));
    }
  }
  return corpus;
}

ValidationReport validate_corpus(const Corpus& corpus) {
  ValidationReport report;
  std::map<std::string, std::size_t> id_count;
  std::map<std::string, std::vector<std::string>> ids_by_name;
  for (const auto& item : corpus.items) {
    if (++id_count[item.id] == 2) report.errors.push_back({item.id, "duplicate id"});
    const auto name = detail::trim(item.name);
    if (name.empty()) {
      report.warnings.push_back({item.id, "empty name"});
    } else {
      ids_by_name[std::string(name)].push_back(item.id);
    }
    if (detail::trim(item.macro_theme).empty()) report.warnings.push_back({item.id, "empty macro theme"});
    if (detail::trim(item.sub_theme).empty()) report.warnings.push_back({item.id, "empty sub theme"});
  }
  for (const auto& [name, ids] : ids_by_name) {
    if (ids.size() < 2) continue;
    for (std::size_t i = 1; i < ids.size(); ++i) {
      report.warnings.push_back({ids[i], "duplicate name '" + name + "' (first seen at " + ids[0] + ")"});
    }
  }
  return report;
}

}  // namespace atlas
