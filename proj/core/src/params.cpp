#include "atlas/params.hpp"

#include <charconv>
#include <cmath>
#include <functional>

#include "atlas/error.hpp"

namespace atlas {

namespace {

template <typename T>
T parse_number(std::string_view name, std::string_view text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InvalidArgument("invalid value '" + std::string(text) + "' for parameter " + std::string(name));
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) throw InvalidArgument("parameter " + std::string(name) + " must be finite");
  }
  return value;
}

struct Setter {
  std::string_view name;
  std::function<void(SimulationParams&, RadialParams&, std::string_view)> set;
};

const std::vector<Setter>& setters() {
  static const std::vector<Setter> table = [] {
    std::vector<Setter> t;
    auto real = [&t](std::string_view name, auto member_of) {
      t.push_back({name, [name, member_of](SimulationParams& s, RadialParams& r, std::string_view v) {
                     member_of(s, r) = parse_number<double>(name, v);
                   }});
    };
    t.push_back({"seed", [](SimulationParams& s, RadialParams&, std::string_view v) {
                   s.seed = parse_number<std::uint64_t>("seed", v);
                 }});
    t.push_back({"ticks", [](SimulationParams& s, RadialParams&, std::string_view v) {
                   s.ticks = parse_number<int>("ticks", v);
                 }});
    real("width", [](SimulationParams& s, RadialParams&) -> double& { return s.viewport.width; });
    real("height", [](SimulationParams& s, RadialParams&) -> double& { return s.viewport.height; });
    real("alpha_start", [](SimulationParams& s, RadialParams&) -> double& { return s.alpha_start; });
    real("alpha_decay", [](SimulationParams& s, RadialParams&) -> double& { return s.alpha_decay; });
    real("velocity_decay", [](SimulationParams& s, RadialParams&) -> double& { return s.velocity_decay; });
    real("repulsion_strength", [](SimulationParams& s, RadialParams&) -> double& { return s.repulsion_strength; });
    real("repulsion_distance_max",
         [](SimulationParams& s, RadialParams&) -> double& { return s.repulsion_distance_max; });
    real("link_distance", [](SimulationParams& s, RadialParams&) -> double& { return s.link_distance; });
    real("link_strength_intra", [](SimulationParams& s, RadialParams&) -> double& { return s.link_strength_intra; });
    real("link_strength_inter", [](SimulationParams& s, RadialParams&) -> double& { return s.link_strength_inter; });
    real("collision_radius", [](SimulationParams& s, RadialParams&) -> double& { return s.collision_radius; });
    real("group_gravity", [](SimulationParams& s, RadialParams&) -> double& { return s.group_gravity; });
    real("inner_fraction", [](SimulationParams&, RadialParams& r) -> double& { return r.inner_fraction; });
    real("outer_fraction", [](SimulationParams&, RadialParams& r) -> double& { return r.outer_fraction; });
    real("border_fraction", [](SimulationParams&, RadialParams& r) -> double& { return r.border_fraction; });
    real("pull_strength", [](SimulationParams&, RadialParams& r) -> double& { return r.pull_strength; });
    t.push_back({"treemap", [](SimulationParams& s, RadialParams&, std::string_view v) {
                   if (v == "squarified") {
                     s.treemap = TreemapAlgorithm::Squarified;
                   } else if (v == "slice_and_dice") {
                     s.treemap = TreemapAlgorithm::SliceAndDice;
                   } else {
                     throw InvalidArgument("treemap must be squarified or slice_and_dice");
                   }
                 }});
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<LayoutParamInfo>& layout_param_table() {
  static const std::vector<LayoutParamInfo> table = {
      {"seed", "42", "PRNG seed for initial jitter and coincident-node separation"},
      {"ticks", "300", "number of simulation ticks (fixed, no early stop)"},
      {"width", "960", "viewport width in layout units"},
      {"height", "640", "viewport height in layout units"},
      {"alpha_start", "1.0", "initial alpha"},
      {"alpha_decay", "1 - 0.001^(1/300)", "per-tick alpha decay"},
      {"velocity_decay", "0.4", "fraction of velocity removed each tick"},
      {"repulsion_strength", "-30", "many-body strength (negative repels)"},
      {"repulsion_distance_max", "100", "pairs at least this far apart do not repel (inf disables)"},
      {"link_distance", "30", "spring rest length"},
      {"link_strength_intra", "1.0", "spring strength inside a theme"},
      {"link_strength_inter", "0.01", "spring strength across themes"},
      {"collision_radius", "6", "per-node collision radius"},
      {"group_gravity", "0.1", "pull toward the node's treemap cell center"},
      {"inner_fraction", "0.10", "radial: innermost ring as a fraction of min(width, height)/2"},
      {"outer_fraction", "0.60", "radial: ring for the smallest non-zero match count"},
      {"border_fraction", "0.95", "radial: ring for unmatched nodes"},
      {"pull_strength", "0.8", "radial: strength of the pull toward the target ring"},
      {"treemap", "squarified", "treemap algorithm: squarified or slice_and_dice"},
  };
  return table;
}

void set_layout_param(SimulationParams& sim, RadialParams& radial, std::string_view name, std::string_view value) {
  for (const auto& setter : setters()) {
    if (setter.name == name) {
      setter.set(sim, radial, value);
      return;
    }
  }
  throw InvalidArgument("unknown layout parameter '" + std::string(name) + "'");
}

}  // namespace atlas
