#include "atlas/analytics.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "atlas/error.hpp"

namespace atlas {

std::string_view to_string(Grouping grouping) noexcept {
  switch (grouping) {
    case Grouping::MacroTheme:
      return "macro_theme";
    case Grouping::SubTheme:
      return "sub_theme";
    case Grouping::NewTheme:
      return "new_theme";
  }
  return "macro_theme";
}

std::string_view to_string(OrderMode mode) noexcept {
  switch (mode) {
    case OrderMode::Natural:
      return "natural";
    case OrderMode::DescRegisters:
      return "desc_registers";
    case OrderMode::DescOperations:
      return "desc_operations";
    case OrderMode::Independent:
      return "independent";
  }
  return "natural";
}

Grouping grouping_from_string(std::string_view text) {
  if (text == "macro" || text == "macro_theme") return Grouping::MacroTheme;
  if (text == "sub" || text == "sub_theme") return Grouping::SubTheme;
  if (text == "new" || text == "new_theme") return Grouping::NewTheme;
  throw InvalidArgument("unknown grouping '" + std::string(text) + "'");
}

OrderMode order_mode_from_string(std::string_view text) {
  if (text == "natural") return OrderMode::Natural;
  if (text == "desc_registers") return OrderMode::DescRegisters;
  if (text == "desc_operations") return OrderMode::DescOperations;
  if (text == "independent") return OrderMode::Independent;
  throw InvalidArgument("unknown order mode '" + std::string(text) + "'");
}

namespace {

std::vector<SeriesEntry> sorted_series(const std::vector<SummaryRow>& rows, bool registers) {
  std::vector<SeriesEntry> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back({row.bucket, registers ? row.registers : row.operations});
  std::sort(out.begin(), out.end(), [](const SeriesEntry& a, const SeriesEntry& b) {
    return std::tie(b.count, a.bucket) < std::tie(a.count, b.bucket);
  });
  return out;
}

}  // namespace

ThemeSummary summarize(const Corpus& corpus, Grouping grouping, OrderMode order,
                       const ClusterAssignment* assignment) {
  if (grouping == Grouping::NewTheme && assignment == nullptr) {
    throw InvalidArgument("new_theme grouping needs a cluster assignment");
  }
  ThemeSummary summary;
  summary.grouping = grouping;
  summary.order_mode = order;

  std::map<std::string, std::size_t> row_of;
  for (const auto& item : corpus.items) {
    std::string bucket;
    switch (grouping) {
      case Grouping::MacroTheme:
        bucket = item.macro_theme;
        break;
      case Grouping::SubTheme:
        bucket = item.sub_theme;
        break;
      case Grouping::NewTheme:
        bucket = assignment->theme_of(item.id);
        break;
    }
    auto [it, inserted] = row_of.emplace(bucket, summary.rows.size());
    if (inserted) summary.rows.push_back({bucket, 0, 0});
    auto& row = summary.rows[it->second];
    (item.kind == ItemKind::AdministrativeRegister ? row.registers : row.operations) += 1;
  }

  auto& rows = summary.rows;
  switch (order) {
    case OrderMode::Natural:
      break;
    case OrderMode::DescRegisters:
      std::sort(rows.begin(), rows.end(), [](const SummaryRow& a, const SummaryRow& b) {
        return std::tie(b.registers, a.bucket) < std::tie(a.registers, b.bucket);
      });
      break;
    case OrderMode::DescOperations:
      std::sort(rows.begin(), rows.end(), [](const SummaryRow& a, const SummaryRow& b) {
        return std::tie(b.operations, a.bucket) < std::tie(a.operations, b.bucket);
      });
      break;
    case OrderMode::Independent:
      summary.registers_sorted = sorted_series(rows, true);
      summary.operations_sorted = sorted_series(rows, false);
      break;
  }
  return summary;
}

std::vector<RankedMatch> rank_by_keyword(const Corpus& corpus, std::string_view keyword,
                                         const DerivationConfig& config) {
  const std::string term = query_term(keyword, config);
  std::vector<RankedMatch> out;
  for (const auto& item : corpus.items) {
    const std::size_t c = count_matches(item, term, config);
    if (c > 0) out.push_back({item.id, item.name, item.kind, c});
  }
  std::sort(out.begin(), out.end(), [](const RankedMatch& a, const RankedMatch& b) {
    return std::tie(b.count, a.name, a.id) < std::tie(a.count, b.name, b.id);
  });
  return out;
}

ItemDetail item_detail(const Corpus& corpus, const ThematicNetwork& network, const ClusterAssignment& assignment,
                       std::string_view id, std::string_view objective_column) {
  const InventoryItem* item = corpus.find(id);
  if (item == nullptr) throw NotFound("unknown item id '" + std::string(id) + "'");

  ItemDetail detail;
  detail.id = item->id;
  detail.name = item->name;
  detail.kind = item->kind;
  detail.macro_theme = item->macro_theme;
  detail.sub_theme = item->sub_theme;
  detail.new_theme = assignment.theme_of(item->id);
  if (const auto* objective = item->field(objective_column)) detail.objective = *objective;
  detail.metadata = item->metadata;

  std::map<std::string_view, std::string_view> term_of;
  for (const auto& node : network.nodes) {
    if (node.role == NodeRole::Keyword) term_of.emplace(node.id, node.label);
  }
  for (const auto& link : network.links) {
    if (link.item_id != item->id) continue;
    const auto it = term_of.find(link.keyword_id);
    detail.keywords.push_back({std::string(it != term_of.end() ? it->second : link.keyword_id), link.weight});
  }
  std::sort(detail.keywords.begin(), detail.keywords.end(), [](const LinkedKeyword& a, const LinkedKeyword& b) {
    return std::tie(b.weight, a.term) < std::tie(a.weight, b.term);
  });
  return detail;
}

}  // namespace atlas
