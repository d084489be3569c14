#include "atlas/layout.hpp"

#include <algorithm>
#include <unordered_map>

#include "atlas/error.hpp"

namespace atlas {

std::string_view to_string(LayoutKind kind) noexcept {
  switch (kind) {
    case LayoutKind::GroupedTreemap:
      return "grouped_treemap";
    case LayoutKind::Radial:
      return "radial";
    case LayoutKind::PlainForce:
      return "plain_force";
  }
  return "plain_force";
}

const PlacedNode* LayoutResult::find(std::string_view id) const noexcept {
  for (const auto& node : nodes) {
    if (node.id == id) return &node;
  }
  return nullptr;
}

double target_radius(std::size_t count, std::size_t c_max, std::size_t c_min, const RingRadii& rings) {
  if (count == 0) return rings.border;
  if (c_max == c_min) return rings.inner;
  const double span = static_cast<double>(c_max - c_min);
  return rings.inner + (rings.outer - rings.inner) * static_cast<double>(c_max - count) / span;
}

namespace {

std::unordered_map<std::string_view, std::size_t> index_nodes(const ThematicNetwork& network) {
  std::unordered_map<std::string_view, std::size_t> index;
  index.reserve(network.nodes.size());
  for (std::size_t i = 0; i < network.nodes.size(); ++i) {
    if (!index.emplace(network.nodes[i].id, i).second) {
      throw InvalidArgument("duplicate node id '" + network.nodes[i].id + "'");
    }
  }
  return index;
}

std::vector<Spring> springs_for(const ThematicNetwork& network,
                                const std::unordered_map<std::string_view, std::size_t>& index,
                                const SimulationParams& params, const ClusterAssignment* assignment) {
  std::vector<Spring> springs;
  springs.reserve(network.links.size());
  for (const auto& link : network.links) {
    const auto s = index.find(link.item_id);
    const auto t = index.find(link.keyword_id);
    if (s == index.end() || t == index.end()) {
      throw InvalidArgument("link " + link.item_id + " -> " + link.keyword_id + " references an unknown node");
    }
    double strength = params.link_strength_intra;
    if (assignment && assignment->theme_of(link.item_id) != assignment->theme_of(link.keyword_id)) {
      strength = params.link_strength_inter;
    }
    springs.push_back({s->second, t->second, params.link_distance, strength});
  }
  return springs;
}

LayoutResult base_result(LayoutKind kind, const ThematicNetwork& network, const SimulationOutcome& outcome,
                         const SimulationParams& params) {
  LayoutResult result;
  result.kind = kind;
  result.params = params;
  result.center = params.viewport.center();
  result.final_mean_displacement = outcome.final_mean_displacement;
  result.nodes.reserve(network.nodes.size());
  for (std::size_t i = 0; i < network.nodes.size(); ++i) {
    PlacedNode placed;
    placed.id = network.nodes[i].id;
    placed.role = network.nodes[i].role;
    placed.kind = network.nodes[i].kind;
    placed.position = outcome.positions[i];
    result.nodes.push_back(std::move(placed));
  }
  return result;
}

}  // namespace

LayoutResult layout_grouped(const ThematicNetwork& network, const ClusterAssignment& assignment,
                            const SimulationParams& params) {
  params.validate();
  const auto index = index_nodes(network);

  // Cell weight = member node count; largest themes first, ties by name.
  std::map<std::string, double> members;
  for (const auto& node : network.nodes) members[assignment.theme_of(node.id)] += 1.0;
  std::vector<std::pair<std::string, double>> weights(members.begin(), members.end());
  std::stable_sort(weights.begin(), weights.end(), [](const auto& a, const auto& b) { return a.second > b.second; });

  const Rect viewport_rect{0.0, 0.0, params.viewport.width, params.viewport.height};
  std::vector<TreemapCell> cells;
  if (!weights.empty()) cells = treemap_partition(weights, viewport_rect, params.treemap);
  std::unordered_map<std::string_view, Vec2> cell_center;
  for (const auto& cell : cells) cell_center.emplace(cell.label, cell.rect.center());

  std::vector<Vec2> targets;
  targets.reserve(network.nodes.size());
  for (const auto& node : network.nodes) targets.push_back(cell_center.at(assignment.theme_of(node.id)));

  ForceSet forces;
  forces.push_back(std::make_unique<ManyBodyForce>(params.repulsion_strength, params.repulsion_distance_max));
  forces.push_back(std::make_unique<LinkForce>(springs_for(network, index, params, &assignment), network.nodes.size()));
  forces.push_back(std::make_unique<AnchorForce>(std::move(targets), params.group_gravity));
  forces.push_back(std::make_unique<CollisionForce>(params.collision_radius));

  const auto initial = init_positions(network.nodes.size(), params.seed, params.viewport);
  const auto outcome = simulate(initial, forces, params);

  LayoutResult result = base_result(LayoutKind::GroupedTreemap, network, outcome, params);
  for (std::size_t i = 0; i < network.nodes.size(); ++i) {
    result.nodes[i].cell = assignment.theme_of(network.nodes[i].id);
  }
  result.cells = std::move(cells);
  return result;
}

LayoutResult layout_radial(const Corpus& corpus, const ThematicNetwork& network, const DerivationConfig& config,
                           std::string_view keyword, const SimulationParams& params, const RadialParams& radial) {
  params.validate();
  const RingRadii rings = radial.rings(params.viewport);
  std::vector<std::string> ignored;
  const std::string term = query_term(keyword, config, &ignored);
  const auto index = index_nodes(network);

  std::unordered_map<std::string_view, const InventoryItem*> items;
  items.reserve(corpus.items.size());
  for (const auto& item : corpus.items) items.emplace(item.id, &item);

  std::vector<std::size_t> counts(network.nodes.size(), 0);
  std::size_t c_max = 0;
  std::size_t c_min = 0;
  for (std::size_t i = 0; i < network.nodes.size(); ++i) {
    const Node& node = network.nodes[i];
    if (node.role != NodeRole::Item) continue;
    const auto it = items.find(node.id);
    if (it == items.end()) throw InvalidArgument("network item '" + node.id + "' is not in the corpus");
    const std::size_t c = count_matches(*it->second, term, config);
    counts[i] = c;
    if (c == 0) continue;
    c_min = c_max == 0 ? c : std::min(c_min, c);
    c_max = std::max(c_max, c);
  }

  const std::string query_node = keyword_node_id(term);
  std::vector<double> radii(network.nodes.size(), rings.border);
  for (std::size_t i = 0; i < network.nodes.size(); ++i) {
    const Node& node = network.nodes[i];
    if (node.role == NodeRole::Item) {
      radii[i] = target_radius(counts[i], c_max, c_min, rings);
    } else if (node.id == query_node) {
      radii[i] = 0.0;
    }
  }

  const Vec2 center = params.viewport.center();
  ForceSet forces;
  forces.push_back(std::make_unique<RadialForce>(center, radii, radial.pull_strength));
  forces.push_back(std::make_unique<ManyBodyForce>(params.repulsion_strength, params.repulsion_distance_max));
  forces.push_back(std::make_unique<CollisionForce>(params.collision_radius));

  const auto initial = init_positions(network.nodes.size(), params.seed, params.viewport);
  const auto outcome = simulate(initial, forces, params);

  LayoutResult result = base_result(LayoutKind::Radial, network, outcome, params);
  for (std::size_t i = 0; i < network.nodes.size(); ++i) {
    result.nodes[i].target_radius = radii[i];
    result.nodes[i].match_count = counts[i];
  }
  result.rings = rings;
  result.radial = radial;
  result.keyword = term;
  for (const auto& extra : ignored) result.warnings.push_back("ignored extra keyword token '" + extra + "'");
  return result;
}

LayoutResult layout_plain(const ThematicNetwork& network, const SimulationParams& params) {
  params.validate();
  const auto index = index_nodes(network);
  ForceSet forces;
  forces.push_back(std::make_unique<ManyBodyForce>(params.repulsion_strength, params.repulsion_distance_max));
  forces.push_back(std::make_unique<LinkForce>(springs_for(network, index, params, nullptr), network.nodes.size()));
  forces.push_back(std::make_unique<CollisionForce>(params.collision_radius));
  forces.push_back(std::make_unique<CenteringForce>(params.viewport.center()));

  const auto initial = init_positions(network.nodes.size(), params.seed, params.viewport);
  const auto outcome = simulate(initial, forces, params);
  return base_result(LayoutKind::PlainForce, network, outcome, params);
}

}  // namespace atlas
