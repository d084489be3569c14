#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/inventory.hpp"
#include "atlas/keywords.hpp"

namespace atlas {

enum class NodeRole { Item, Keyword };

std::string_view to_string(NodeRole role) noexcept;

// Keyword node ids are "kw:<term>"; item node ids are the corpus item ids.
std::string keyword_node_id(std::string_view term);

struct Node {
  std::string id;
  NodeRole role = NodeRole::Item;
  // Item name, or the keyword term.
  std::string label;
  // Items only.
  ItemKind kind = ItemKind::AdministrativeRegister;
  // Keywords only: corpus frequency from the dictionary.
  std::size_t frequency = 0;

  bool operator==(const Node&) const = default;
};

struct Link {
  std::string item_id;
  std::string keyword_id;
  std::size_t weight = 0;

  bool operator==(const Link&) const = default;
};

// Bipartite item/keyword graph. Items come first in corpus order, then keywords in
// term order; links are grouped by item, keywords ascending within an item.
struct ThematicNetwork {
  std::vector<Node> nodes;
  std::vector<Link> links;

  std::optional<std::size_t> index_of(std::string_view id) const;
  std::size_t item_count() const noexcept;
  std::size_t keyword_count() const noexcept { return nodes.size() - item_count(); }

  bool operator==(const ThematicNetwork&) const = default;
};

// Throws InvalidArgument when an item id collides with a keyword node id.
ThematicNetwork derive_network(const Corpus& corpus, const KeywordDictionary& dictionary,
                               const DerivationConfig& config);

inline constexpr std::string_view kUnclassified = "unclassified";

struct ClusterAssignment {
  // Node id -> theme label (a keyword term, or kUnclassified).
  std::map<std::string, std::string> theme_by_node;
  // Theme -> number of member nodes (items and keyword nodes).
  std::map<std::string, std::size_t> member_counts;

  // Throws NotFound for an unknown node id.
  const std::string& theme_of(std::string_view node_id) const;

  bool operator==(const ClusterAssignment&) const = default;
};

// Each item joins the keyword it links to with the largest weight. Ties go to the
// keyword with the larger corpus frequency, then to the lexicographically smaller term.
// Linkless items are kUnclassified; keyword nodes are their own theme.
ClusterAssignment assign_clusters(const ThematicNetwork& network);

struct ThemeCount {
  std::string theme;
  std::size_t items = 0;
  std::size_t keywords = 0;

  bool operator==(const ThemeCount&) const = default;
};

// Descending by item count, ties by theme name.
std::vector<ThemeCount> theme_distribution(const ThematicNetwork& network, const ClusterAssignment& assignment);

}  // namespace atlas
