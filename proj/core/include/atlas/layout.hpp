#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atlas/inventory.hpp"
#include "atlas/keywords.hpp"
#include "atlas/network.hpp"
#include "atlas/random.hpp"

namespace atlas {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Vec2&) const = default;
};

inline double distance(Vec2 a, Vec2 b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

struct Viewport {
  double width = 960.0;
  double height = 640.0;

  Vec2 center() const noexcept { return {width / 2.0, height / 2.0}; }
  bool operator==(const Viewport&) const = default;
};

struct Rect {
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;

  double area() const noexcept { return width * height; }
  Vec2 center() const noexcept { return {x + width / 2.0, y + height / 2.0}; }
  // Inclusive containment in the rectangle grown by `margin` on every side.
  bool contains(Vec2 p, double margin = 0.0) const noexcept {
    return p.x >= x - margin && p.x <= x + width + margin && p.y >= y - margin && p.y <= y + height + margin;
  }
  bool operator==(const Rect&) const = default;
};

enum class TreemapAlgorithm { Squarified, SliceAndDice };

// Default per-tick decay that brings alpha from 1 to 0.001 in 300 ticks.
inline double default_alpha_decay() { return 1.0 - std::pow(0.001, 1.0 / 300.0); }

struct SimulationParams {
  std::uint64_t seed = 42;
  int ticks = 300;
  double alpha_start = 1.0;
  double alpha_min = 0.001;
  double alpha_decay = default_alpha_decay();
  double velocity_decay = 0.4;
  double repulsion_strength = -30.0;
  // Pairs this far apart or farther do not repel.
  double repulsion_distance_max = 100.0;
  double link_distance = 30.0;
  double link_strength_intra = 1.0;
  double link_strength_inter = 0.01;
  double collision_radius = 6.0;
  double group_gravity = 0.1;
  Viewport viewport;
  TreemapAlgorithm treemap = TreemapAlgorithm::Squarified;

  // Throws InvalidArgument.
  void validate() const;
  bool operator==(const SimulationParams&) const = default;
};

struct RingRadii {
  double view = 0.0;
  double inner = 0.0;
  double outer = 0.0;
  double border = 0.0;

  bool operator==(const RingRadii&) const = default;
};

struct RadialParams {
  double inner_fraction = 0.10;
  double outer_fraction = 0.60;
  double border_fraction = 0.95;
  double pull_strength = 0.8;

  // Radii relative to R_view = min(width, height) / 2. Throws InvalidArgument unless
  // 0 < inner < outer < border <= view.
  RingRadii rings(const Viewport& viewport) const;
  bool operator==(const RadialParams&) const = default;
};

// ---------------------------------------------------------------------------
// Force simulation

struct Body {
  Vec2 position;
  Vec2 velocity;
};

// A force adds to body velocities (or, for centering, shifts positions) once per tick.
// `rng` supplies the tiny deterministic offsets used to separate coincident bodies.
class Force {
 public:
  virtual ~Force() = default;
  virtual void apply(std::span<Body> bodies, double alpha, SplitMix64& rng) = 0;
};

using ForceSet = std::vector<std::unique_ptr<Force>>;

// Exact O(n^2) charge: each pair contributes strength * alpha / d^2 along the pair axis;
// negative strength repels. Squared distances below distance_min^2 are softened; pairs
// at distance_max or farther are skipped.
class ManyBodyForce final : public Force {
 public:
  explicit ManyBodyForce(double strength, double distance_max = std::numeric_limits<double>::infinity(),
                         double distance_min = 1.0)
      : strength_(strength),
        distance_min2_(distance_min * distance_min),
        distance_max2_(distance_max * distance_max) {}
  void apply(std::span<Body> bodies, double alpha, SplitMix64& rng) override;

 private:
  double strength_;
  double distance_min2_;
  double distance_max2_;
};

struct Spring {
  std::size_t source = 0;
  std::size_t target = 0;
  double distance = 30.0;
  double strength = 1.0;
};

// Springs toward a rest length. Each correction is split between the endpoints in
// inverse proportion to their degree.
class LinkForce final : public Force {
 public:
  LinkForce(std::vector<Spring> springs, std::size_t body_count);
  void apply(std::span<Body> bodies, double alpha, SplitMix64& rng) override;

 private:
  std::vector<Spring> springs_;
  std::vector<double> bias_;
};

// Pairwise overlap resolution for equal-radius circles. Not scaled by alpha.
class CollisionForce final : public Force {
 public:
  explicit CollisionForce(double radius, double strength = 1.0) : radius_(radius), strength_(strength) {}
  void apply(std::span<Body> bodies, double alpha, SplitMix64& rng) override;

 private:
  double radius_;
  double strength_;
};

// Per-body pull toward a fixed target point, independently on x and y.
class AnchorForce final : public Force {
 public:
  AnchorForce(std::vector<Vec2> targets, double strength) : targets_(std::move(targets)), strength_(strength) {}
  void apply(std::span<Body> bodies, double alpha, SplitMix64& rng) override;

 private:
  std::vector<Vec2> targets_;
  double strength_;
};

// Per-body pull toward a circle of the given radius around `center`.
class RadialForce final : public Force {
 public:
  RadialForce(Vec2 center, std::vector<double> radii, double strength)
      : center_(center), radii_(std::move(radii)), strength_(strength) {}
  void apply(std::span<Body> bodies, double alpha, SplitMix64& rng) override;

 private:
  Vec2 center_;
  std::vector<double> radii_;
  double strength_;
};

// Translates all bodies so their centroid sits on `center`.
class CenteringForce final : public Force {
 public:
  explicit CenteringForce(Vec2 center) : center_(center) {}
  void apply(std::span<Body> bodies, double alpha, SplitMix64& rng) override;

 private:
  Vec2 center_;
};

// Phyllotaxis spiral around the viewport center (radius 10*sqrt(i), angle i * golden
// angle) plus a SplitMix64 jitter in [-0.5, 0.5] per coordinate.
std::vector<Vec2> init_positions(std::size_t n, std::uint64_t seed, const Viewport& viewport);

struct SimulationOutcome {
  std::vector<Vec2> positions;
  // Mean per-body displacement during the final tick.
  double final_mean_displacement = 0.0;
};

// Runs exactly params.ticks ticks. Each tick decays alpha, applies the forces in order,
// damps velocities by velocity_decay and integrates positions. Throws SimulationError
// naming the tick on a non-finite position.
SimulationOutcome simulate(std::span<const Vec2> initial, const ForceSet& forces, const SimulationParams& params);

// ---------------------------------------------------------------------------
// Treemap

struct TreemapCell {
  std::string label;
  Rect rect;
  double weight = 0.0;

  bool operator==(const TreemapCell&) const = default;
};

// Cells come back in input order. Squarified greedily closes a row when adding the next
// (descending) weight would worsen the row's worst aspect ratio; slice-and-dice cuts
// the longer side in input order. Throws InvalidArgument on an empty list or a
// non-positive weight.
std::vector<TreemapCell> treemap_partition(std::span<const std::pair<std::string, double>> weights,
                                           const Rect& rect,
                                           TreemapAlgorithm algorithm = TreemapAlgorithm::Squarified);

// ---------------------------------------------------------------------------
// Composite layouts

enum class LayoutKind { GroupedTreemap, Radial, PlainForce };

std::string_view to_string(LayoutKind kind) noexcept;

struct PlacedNode {
  std::string id;
  NodeRole role = NodeRole::Item;
  // Items only.
  ItemKind kind = ItemKind::AdministrativeRegister;
  Vec2 position;
  // Grouped layout: the theme cell the node is pulled into.
  std::string cell;
  // Radial layout: the ring the node is pulled toward, and its keyword match count.
  double target_radius = 0.0;
  std::size_t match_count = 0;

  bool operator==(const PlacedNode&) const = default;
};

struct LayoutResult {
  LayoutKind kind = LayoutKind::PlainForce;
  std::vector<PlacedNode> nodes;
  std::vector<TreemapCell> cells;
  Vec2 center;
  RingRadii rings;
  // Radial layout: the normalized query term and any dropped extra tokens.
  std::string keyword;
  std::vector<std::string> warnings;
  SimulationParams params;
  RadialParams radial;
  double final_mean_displacement = 0.0;

  const PlacedNode* find(std::string_view id) const noexcept;
};

// c == 0 -> border; c_max == c_min -> inner; else linear between inner (c_max) and
// outer (c_min).
double target_radius(std::size_t count, std::size_t c_max, std::size_t c_min, const RingRadii& rings);

// Force-in-a-box: treemap cells sized by theme member count, then repulsion + links
// (weaker across themes) + gravity to the node's cell center + collision.
LayoutResult layout_grouped(const ThematicNetwork& network, const ClusterAssignment& assignment,
                            const SimulationParams& params);

// Radial keyword layout. Items are pulled toward target_radius of their match count;
// the queried keyword node goes to the center and every other keyword node to the
// border. Throws InvalidArgument when the keyword normalizes to nothing, or when a
// network item is missing from the corpus.
LayoutResult layout_radial(const Corpus& corpus, const ThematicNetwork& network, const DerivationConfig& config,
                           std::string_view keyword, const SimulationParams& params,
                           const RadialParams& radial = {});

// Ungrouped debug layout: repulsion + links + collision + centering.
LayoutResult layout_plain(const ThematicNetwork& network, const SimulationParams& params);

}  // namespace atlas
