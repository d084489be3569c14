#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace atlas {

enum class ItemKind { AdministrativeRegister, StatisticalOperation };

// "register" / "operation"
std::string_view to_string(ItemKind kind) noexcept;
// Accepts "register", "operation" (and the long enumerator names). Throws InvalidArgument.
ItemKind item_kind_from_string(std::string_view text);

// Ordered column -> text mapping; column order follows the CSV header.
using Metadata = std::vector<std::pair<std::string, std::string>>;

// One row of an inventory. Cell text is stored verbatim.
struct InventoryItem {
  std::string id;
  std::string name;
  ItemKind kind = ItemKind::AdministrativeRegister;
  std::string macro_theme;
  std::string sub_theme;
  Metadata metadata;

  // Returns nullptr when the column is absent.
  const std::string* field(std::string_view column) const noexcept;

  bool operator==(const InventoryItem&) const = default;
};

struct SourceFile {
  std::string tag;
  std::string path;
  ItemKind kind = ItemKind::AdministrativeRegister;
  std::size_t row_count = 0;

  bool operator==(const SourceFile&) const = default;
};

struct Corpus {
  std::vector<InventoryItem> items;
  std::vector<SourceFile> source_files;
  // Every column name seen across the inputs, in first-seen order.
  std::vector<std::string> schema;

  const InventoryItem* find(std::string_view id) const noexcept;
  std::size_t count(ItemKind kind) const noexcept;

  bool operator==(const Corpus&) const = default;
};

// Maps the semantic fields onto CSV header names. Only the name column is mandatory;
// an empty macro/sub column name means "not mapped".
struct SchemaConfig {
  std::string name_column = "nombre";
  std::string macro_theme_column = "tema";
  std::string sub_theme_column = "subtema";

  // Flat "key = value" text with keys name, macro_theme, sub_theme. '#' starts a comment.
  static SchemaConfig parse(std::string_view text);
};

struct Issue {
  std::string locator;
  std::string message;

  bool operator==(const Issue&) const = default;
};

struct ValidationReport {
  std::vector<Issue> errors;
  std::vector<Issue> warnings;

  bool usable() const noexcept { return errors.empty(); }
};

// Parses one inventory. Item ids are the 1-based data-row ordinal ("1", "2", ...); the
// ordinal counts skipped blank rows so an id always points at its physical row.
// Blank rows (every cell empty) are skipped and reported through `warnings` when given.
// Throws ParseError naming the missing column or the 1-based line of a malformed record.
std::vector<InventoryItem> parse_inventory(std::string_view csv_text, ItemKind kind,
                                           const SchemaConfig& schema,
                                           std::string_view source_name = "<csv>",
                                           std::vector<Issue>* warnings = nullptr);

struct InventoryPart {
  std::string tag;
  std::string path;
  ItemKind kind = ItemKind::AdministrativeRegister;
  std::vector<InventoryItem> items;
  // Header columns; when empty, merge falls back to the items' metadata keys.
  std::vector<std::string> columns;
};

// parse_inventory plus the header, packaged for merge_inventories.
InventoryPart load_inventory(std::string_view csv_text, ItemKind kind, const SchemaConfig& schema,
                             std::string tag, std::string path,
                             std::vector<Issue>* warnings = nullptr);

// Concatenates parts in order, prefixing ids with "<tag>:". Throws InvalidArgument on a
// duplicate (tag, id) pair.
Corpus merge_inventories(std::vector<InventoryPart> parts);

ValidationReport validate_corpus(const Corpus& corpus);

}  // namespace atlas
