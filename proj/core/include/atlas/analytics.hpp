#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atlas/inventory.hpp"
#include "atlas/keywords.hpp"
#include "atlas/network.hpp"

namespace atlas {

enum class Grouping { MacroTheme, SubTheme, NewTheme };
enum class OrderMode { Natural, DescRegisters, DescOperations, Independent };

std::string_view to_string(Grouping grouping) noexcept;
std::string_view to_string(OrderMode mode) noexcept;
// Accept "macro"/"macro_theme", "sub"/"sub_theme", "new"/"new_theme". Throws InvalidArgument.
Grouping grouping_from_string(std::string_view text);
// Accept "natural", "desc_registers", "desc_operations", "independent". Throws InvalidArgument.
OrderMode order_mode_from_string(std::string_view text);

struct SummaryRow {
  std::string bucket;
  std::size_t registers = 0;
  std::size_t operations = 0;

  bool operator==(const SummaryRow&) const = default;
};

struct SeriesEntry {
  std::string bucket;
  std::size_t count = 0;

  bool operator==(const SeriesEntry&) const = default;
};

struct ThemeSummary {
  Grouping grouping = Grouping::MacroTheme;
  OrderMode order_mode = OrderMode::Natural;
  // Natural mode and Independent mode: first-appearance order. Desc modes: sorted by
  // the named series, ties by bucket label.
  std::vector<SummaryRow> rows;
  // Independent mode only: each series sorted on its own, descending, ties by label.
  std::vector<SeriesEntry> registers_sorted;
  std::vector<SeriesEntry> operations_sorted;

  bool operator==(const ThemeSummary&) const = default;
};

// Group-by over the corpus split by item kind. NewTheme needs the cluster assignment
// (throws InvalidArgument without one).
ThemeSummary summarize(const Corpus& corpus, Grouping grouping, OrderMode order,
                       const ClusterAssignment* assignment = nullptr);

struct RankedMatch {
  std::string id;
  std::string name;
  ItemKind kind = ItemKind::AdministrativeRegister;
  std::size_t count = 0;

  bool operator==(const RankedMatch&) const = default;
};

// Items with at least one match, by count descending, then name, then id.
std::vector<RankedMatch> rank_by_keyword(const Corpus& corpus, std::string_view keyword,
                                         const DerivationConfig& config);

struct LinkedKeyword {
  std::string term;
  std::size_t weight = 0;

  bool operator==(const LinkedKeyword&) const = default;
};

struct ItemDetail {
  std::string id;
  std::string name;
  ItemKind kind = ItemKind::AdministrativeRegister;
  std::string macro_theme;
  std::string sub_theme;
  std::string new_theme;
  // Verbatim text of the objective column; empty when the column is absent.
  std::string objective;
  Metadata metadata;
  // Weight descending, ties by term.
  std::vector<LinkedKeyword> keywords;

  bool operator==(const ItemDetail&) const = default;
};

inline constexpr std::string_view kDefaultObjectiveColumn = "objetivo";

// Throws NotFound for an unknown id.
ItemDetail item_detail(const Corpus& corpus, const ThematicNetwork& network, const ClusterAssignment& assignment,
                       std::string_view id, std::string_view objective_column = kDefaultObjectiveColumn);

}  // namespace atlas
