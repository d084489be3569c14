#include "atlas/network.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "atlas/error.hpp"

namespace atlas {

std::string_view to_string(NodeRole role) noexcept {
  return role == NodeRole::Item ? "item" : "keyword";
}

std::string keyword_node_id(std::string_view term) { return "kw:" + std::string(term); }

std::optional<std::size_t> ThematicNetwork::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t ThematicNetwork::item_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.role == NodeRole::Item; }));
}

ThematicNetwork derive_network(const Corpus& corpus, const KeywordDictionary& dictionary,
                               const DerivationConfig& config) {
  ThematicNetwork network;
  network.nodes.reserve(corpus.items.size() + dictionary.entries.size());
  for (const auto& item : corpus.items) {
    if (item.id.starts_with("kw:")) {
      throw InvalidArgument("item id '" + item.id + "' collides with the keyword node namespace");
    }
    network.nodes.push_back({item.id, NodeRole::Item, item.name, item.kind, 0});
  }
  for (const auto& [term, frequency] : dictionary.entries) {
    network.nodes.push_back({keyword_node_id(term), NodeRole::Keyword, term, ItemKind::AdministrativeRegister, frequency});
  }
  for (const auto& item : corpus.items) {
    for (const auto& [term, n] : term_counts(item, config)) {
      if (dictionary.contains(term)) network.links.push_back({item.id, keyword_node_id(term), n});
    }
  }
  return network;
}

const std::string& ClusterAssignment::theme_of(std::string_view node_id) const {
  const auto it = theme_by_node.find(std::string(node_id));
  if (it == theme_by_node.end()) throw NotFound("no theme for node '" + std::string(node_id) + "'");
  return it->second;
}

ClusterAssignment assign_clusters(const ThematicNetwork& network) {
  struct Keyword {
    const std::string* term;
    std::size_t frequency;
  };
  std::unordered_map<std::string_view, Keyword> keywords;
  for (const auto& node : network.nodes) {
    if (node.role == NodeRole::Keyword) keywords.emplace(node.id, Keyword{&node.label, node.frequency});
  }

  // Best link per item under (weight desc, frequency desc, term asc).
  struct Best {
    std::size_t weight;
    std::size_t frequency;
    const std::string* term;
  };
  std::unordered_map<std::string_view, Best> best;
  for (const auto& link : network.links) {
    const auto kw = keywords.find(link.keyword_id);
    if (kw == keywords.end()) throw InvalidArgument("link to unknown keyword node '" + link.keyword_id + "'");
    const Best candidate{link.weight, kw->second.frequency, kw->second.term};
    auto [it, inserted] = best.emplace(link.item_id, candidate);
    if (inserted) continue;
    const auto& cur = it->second;
    const bool better = std::tie(candidate.weight, candidate.frequency) > std::tie(cur.weight, cur.frequency) ||
                        (candidate.weight == cur.weight && candidate.frequency == cur.frequency &&
                         *candidate.term < *cur.term);
    if (better) it->second = candidate;
  }

  ClusterAssignment assignment;
  for (const auto& node : network.nodes) {
    std::string theme;
    if (node.role == NodeRole::Keyword) {
      theme = node.label;
    } else if (const auto it = best.find(node.id); it != best.end()) {
      theme = *it->second.term;
    } else {
      theme = std::string(kUnclassified);
    }
    ++assignment.member_counts[theme];
    assignment.theme_by_node.emplace(node.id, std::move(theme));
  }
  return assignment;
}

std::vector<ThemeCount> theme_distribution(const ThematicNetwork& network, const ClusterAssignment& assignment) {
  std::map<std::string, ThemeCount> by_theme;
  for (const auto& node : network.nodes) {
    const auto& theme = assignment.theme_of(node.id);
    auto& row = by_theme[theme];
    row.theme = theme;
    (node.role == NodeRole::Item ? row.items : row.keywords) += 1;
  }
  std::vector<ThemeCount> rows;
  rows.reserve(by_theme.size());
  for (auto& entry : by_theme) rows.push_back(std::move(entry.second));
  std::stable_sort(rows.begin(), rows.end(), [](const ThemeCount& a, const ThemeCount& b) {
    return a.items > b.items;  // map order already gives the lexicographic tie-break
  });
  return rows;
}

}  // namespace atlas
