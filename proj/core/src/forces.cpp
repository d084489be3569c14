#include <cmath>
#include <numbers>

#include "atlas/error.hpp"
#include "atlas/layout.hpp"

namespace atlas {

namespace {

double jiggle(SplitMix64& rng) { return (rng.uniform() - 0.5) * 1e-6; }

}  // namespace

void SimulationParams::validate() const {
  if (ticks < 1) throw InvalidArgument("ticks must be at least 1");
  if (!(alpha_decay > 0.0 && alpha_decay < 1.0)) throw InvalidArgument("alpha_decay must lie in (0, 1)");
  if (!(velocity_decay >= 0.0 && velocity_decay <= 1.0)) throw InvalidArgument("velocity_decay must lie in [0, 1]");
  if (!(viewport.width > 0.0 && viewport.height > 0.0)) throw InvalidArgument("viewport must be positive");
  if (!(collision_radius >= 0.0)) throw InvalidArgument("collision_radius must be non-negative");
  if (!(repulsion_distance_max > 0.0)) throw InvalidArgument("repulsion_distance_max must be positive");
  if (!std::isfinite(repulsion_strength) || !std::isfinite(link_distance) || !std::isfinite(group_gravity) ||
      !std::isfinite(link_strength_intra) || !std::isfinite(link_strength_inter)) {
    throw InvalidArgument("force parameters must be finite");
  }
}

RingRadii RadialParams::rings(const Viewport& viewport) const {
  RingRadii r;
  r.view = std::min(viewport.width, viewport.height) / 2.0;
  r.inner = inner_fraction * r.view;
  r.outer = outer_fraction * r.view;
  r.border = border_fraction * r.view;
  if (!(0.0 < r.inner && r.inner < r.outer && r.outer < r.border && r.border <= r.view)) {
    throw InvalidArgument("radial rings must satisfy 0 < inner < outer < border <= view");
  }
  return r;
}

void ManyBodyForce::apply(std::span<Body> bodies, double alpha, SplitMix64& rng) {
  const double k = strength_ * alpha;
  const std::size_t n = bodies.size();
  for (std::size_t i = 0; i < n; ++i) {
    Body& a = bodies[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      Body& b = bodies[j];
      double dx = b.position.x - a.position.x;
      double dy = b.position.y - a.position.y;
      double l = dx * dx + dy * dy;
      if (l >= distance_max2_) continue;
      if (dx == 0.0) {
        dx = jiggle(rng);
        l += dx * dx;
      }
      if (dy == 0.0) {
        dy = jiggle(rng);
        l += dy * dy;
      }
      if (l < distance_min2_) l = std::sqrt(distance_min2_ * l);
      const double f = k / l;
      a.velocity.x += dx * f;
      a.velocity.y += dy * f;
      b.velocity.x -= dx * f;
      b.velocity.y -= dy * f;
    }
  }
}

LinkForce::LinkForce(std::vector<Spring> springs, std::size_t body_count) : springs_(std::move(springs)) {
  std::vector<std::size_t> degree(body_count, 0);
  for (const auto& s : springs_) {
    if (s.source >= body_count || s.target >= body_count) throw InvalidArgument("spring endpoint out of range");
    ++degree[s.source];
    ++degree[s.target];
  }
  bias_.reserve(springs_.size());
  for (const auto& s : springs_) {
    bias_.push_back(static_cast<double>(degree[s.source]) /
                    static_cast<double>(degree[s.source] + degree[s.target]));
  }
}

void LinkForce::apply(std::span<Body> bodies, double alpha, SplitMix64& rng) {
  for (std::size_t i = 0; i < springs_.size(); ++i) {
    const Spring& s = springs_[i];
    Body& source = bodies[s.source];
    Body& target = bodies[s.target];
    double x = target.position.x + target.velocity.x - source.position.x - source.velocity.x;
    double y = target.position.y + target.velocity.y - source.position.y - source.velocity.y;
    if (x == 0.0) x = jiggle(rng);
    if (y == 0.0) y = jiggle(rng);
    double l = std::sqrt(x * x + y * y);
    l = (l - s.distance) / l * alpha * s.strength;
    x *= l;
    y *= l;
    const double b = bias_[i];
    target.velocity.x -= x * b;
    target.velocity.y -= y * b;
    source.velocity.x += x * (1.0 - b);
    source.velocity.y += y * (1.0 - b);
  }
}

void CollisionForce::apply(std::span<Body> bodies, double /*alpha*/, SplitMix64& rng) {
  const double r = 2.0 * radius_;
  const double r2 = r * r;
  const std::size_t n = bodies.size();
  for (std::size_t i = 0; i < n; ++i) {
    Body& a = bodies[i];
    const double xi = a.position.x + a.velocity.x;
    const double yi = a.position.y + a.velocity.y;
    for (std::size_t j = i + 1; j < n; ++j) {
      Body& b = bodies[j];
      double x = xi - b.position.x - b.velocity.x;
      double y = yi - b.position.y - b.velocity.y;
      double l = x * x + y * y;
      if (l >= r2) continue;
      if (x == 0.0) {
        x = jiggle(rng);
        l += x * x;
      }
      if (y == 0.0) {
        y = jiggle(rng);
        l += y * y;
      }
      l = std::sqrt(l);
      l = (r - l) / l * strength_;
      x *= l;
      y *= l;
      // Equal radii: the push is shared evenly.
      a.velocity.x += x * 0.5;
      a.velocity.y += y * 0.5;
      b.velocity.x -= x * 0.5;
      b.velocity.y -= y * 0.5;
    }
  }
}

void AnchorForce::apply(std::span<Body> bodies, double alpha, SplitMix64& /*rng*/) {
  const double k = strength_ * alpha;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    bodies[i].velocity.x += (targets_[i].x - bodies[i].position.x) * k;
    bodies[i].velocity.y += (targets_[i].y - bodies[i].position.y) * k;
  }
}

void RadialForce::apply(std::span<Body> bodies, double alpha, SplitMix64& /*rng*/) {
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    Body& body = bodies[i];
    double dx = body.position.x - center_.x;
    double dy = body.position.y - center_.y;
    if (dx == 0.0) dx = 1e-6;
    if (dy == 0.0) dy = 1e-6;
    const double r = std::sqrt(dx * dx + dy * dy);
    const double k = (radii_[i] - r) * strength_ * alpha / r;
    body.velocity.x += dx * k;
    body.velocity.y += dy * k;
  }
}

void CenteringForce::apply(std::span<Body> bodies, double /*alpha*/, SplitMix64& /*rng*/) {
  if (bodies.empty()) return;
  double sx = 0.0;
  double sy = 0.0;
  for (const Body& body : bodies) {
    sx += body.position.x;
    sy += body.position.y;
  }
  const double n = static_cast<double>(bodies.size());
  sx = sx / n - center_.x;
  sy = sy / n - center_.y;
  for (Body& body : bodies) {
    body.position.x -= sx;
    body.position.y -= sy;
  }
}

std::vector<Vec2> init_positions(std::size_t n, std::uint64_t seed, const Viewport& viewport) {
  constexpr double kInitialRadius = 10.0;
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const Vec2 c = viewport.center();
  SplitMix64 rng(seed);
  std::vector<Vec2> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = kInitialRadius * std::sqrt(static_cast<double>(i));
    const double angle = static_cast<double>(i) * golden_angle;
    const double jx = rng.uniform() - 0.5;
    const double jy = rng.uniform() - 0.5;
    out.push_back({c.x + r * std::cos(angle) + jx, c.y + r * std::sin(angle) + jy});
  }
  return out;
}

SimulationOutcome simulate(std::span<const Vec2> initial, const ForceSet& forces, const SimulationParams& params) {
  params.validate();
  std::vector<Body> bodies;
  bodies.reserve(initial.size());
  for (const Vec2& p : initial) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw SimulationError(0, "non-finite initial position");
    bodies.push_back({p, {}});
  }

  // Independent of the init_positions stream so jitter and jiggle do not correlate.
  SplitMix64 rng(params.seed ^ 0x5deece66dULL);
  const double damping = 1.0 - params.velocity_decay;
  double alpha = params.alpha_start;
  double last_displacement = 0.0;

  std::vector<Vec2> before;
  for (int tick = 1; tick <= params.ticks; ++tick) {
    const bool last = tick == params.ticks;
    if (last) {
      before.reserve(bodies.size());
      for (const Body& body : bodies) before.push_back(body.position);
    }

    alpha += (0.0 - alpha) * params.alpha_decay;
    for (const auto& force : forces) force->apply(bodies, alpha, rng);

    for (Body& body : bodies) {
      body.velocity.x *= damping;
      body.velocity.y *= damping;
      body.position.x += body.velocity.x;
      body.position.y += body.velocity.y;
      if (!std::isfinite(body.position.x) || !std::isfinite(body.position.y)) {
        throw SimulationError(tick, "non-finite position (force blow-up)");
      }
    }

    if (last && !bodies.empty()) {
      double total = 0.0;
      for (std::size_t i = 0; i < bodies.size(); ++i) total += distance(before[i], bodies[i].position);
      last_displacement = total / static_cast<double>(bodies.size());
    }
  }

  SimulationOutcome out;
  out.final_mean_displacement = last_displacement;
  out.positions.reserve(bodies.size());
  for (const Body& body : bodies) out.positions.push_back(body.position);
  return out;
}

}  // namespace atlas
