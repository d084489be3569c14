#include "atlas/api.hpp"

#include <cstdio>

#include "atlas/analytics.hpp"
#include "atlas/error.hpp"
#include "atlas/export.hpp"
#include "atlas/layout.hpp"
#include "atlas/params.hpp"

namespace atlas {

namespace {

const std::string* first_value(const QueryParams& query, std::string_view key) {
  const auto it = query.find(std::string(key));
  return it == query.end() ? nullptr : &it->second;
}

std::string hex_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

std::string cache_key(std::uint64_t generation, bool radial, std::string_view term, const SimulationParams& p,
                      const RadialParams& r) {
  std::string key = std::to_string(generation) + (radial ? "|radial|" : "|grouped|") + std::string(term);
  for (double v : {p.alpha_start, p.alpha_min, p.alpha_decay, p.velocity_decay, p.repulsion_strength, p.repulsion_distance_max,
                   p.link_distance,
                   p.link_strength_intra, p.link_strength_inter, p.collision_radius, p.group_gravity, p.viewport.width,
                   p.viewport.height, r.inner_fraction, r.outer_fraction, r.border_fraction, r.pull_strength}) {
    key += '|' + hex_double(v);
  }
  key += '|' + std::to_string(p.seed) + '|' + std::to_string(p.ticks) + '|' +
         (p.treemap == TreemapAlgorithm::Squarified ? "sq" : "sd");
  return key;
}

ApiResponse error_response(int status, std::string_view message) {
  return {status, export_error_json(status, message)};
}

}  // namespace

ApiService::ApiService(std::shared_ptr<const Snapshot> snapshot) : snapshot_(std::move(snapshot)) {
  if (!snapshot_) throw InvalidArgument("ApiService needs a snapshot");
}

void ApiService::swap_snapshot(std::shared_ptr<const Snapshot> snapshot) {
  if (!snapshot) throw InvalidArgument("cannot swap in an empty snapshot");
  std::lock_guard lock(mutex_);
  snapshot_ = std::move(snapshot);
  ++generation_;
  layout_cache_.clear();
}

std::shared_ptr<const Snapshot> ApiService::snapshot() const {
  std::lock_guard lock(mutex_);
  return snapshot_;
}

std::size_t ApiService::cached_layouts() const {
  std::lock_guard lock(mutex_);
  return layout_cache_.size();
}

ApiResponse ApiService::layout(const Snapshot& snapshot, std::uint64_t generation, bool radial,
                               const QueryParams& query) const {
  SimulationParams params;
  RadialParams radial_params;
  const std::string* keyword = nullptr;
  for (const auto& [key, value] : query) {
    if (radial && key == "keyword") {
      if (!keyword) keyword = &value;
      continue;
    }
    set_layout_param(params, radial_params, key, value);
  }
  params.validate();

  std::string term;
  if (radial) {
    if (!keyword) throw InvalidArgument("missing keyword parameter");
    term = query_term(*keyword, snapshot.config);
  }

  const std::string key = cache_key(generation, radial, term, params, radial_params);
  {
    std::lock_guard lock(mutex_);
    if (const auto it = layout_cache_.find(key); it != layout_cache_.end()) return {200, it->second};
  }

  const LayoutResult result =
      radial ? layout_radial(snapshot.corpus, snapshot.network, snapshot.config, *keyword, params, radial_params)
             : layout_grouped(snapshot.network, snapshot.assignment, params);
  std::string body = export_layout_json(result);

  std::lock_guard lock(mutex_);
  // A concurrent swap may have happened meanwhile; only cache for the live generation.
  if (generation == generation_) layout_cache_.emplace(key, body);
  return {200, std::move(body)};
}

ApiResponse ApiService::handle(std::string_view path, const QueryParams& query) const {
  std::shared_ptr<const Snapshot> snap;
  std::uint64_t generation = 0;
  {
    std::lock_guard lock(mutex_);
    snap = snapshot_;
    generation = generation_;
  }
  const Snapshot& s = *snap;

  try {
    if (path == "/api/network") return {200, export_network_json(s.network, s.assignment)};
    if (path == "/api/keywords") return {200, export_dictionary_json(s.dictionary)};
    if (path == "/api/summary") {
      const auto* group_by = first_value(query, "group_by");
      const auto* order = first_value(query, "order");
      const auto summary = summarize(s.corpus, grouping_from_string(group_by ? *group_by : "macro_theme"),
                                     order_mode_from_string(order ? *order : "natural"), &s.assignment);
      return {200, export_summary_json(summary)};
    }
    if (path == "/api/rank") {
      const auto* keyword = first_value(query, "keyword");
      if (!keyword) throw InvalidArgument("missing keyword parameter");
      const auto term = query_term(*keyword, s.config);
      return {200, export_ranking_json(term, rank_by_keyword(s.corpus, *keyword, s.config))};
    }
    if (path == "/api/layout/grouped") return layout(s, generation, false, query);
    if (path == "/api/layout/radial") return layout(s, generation, true, query);
    constexpr std::string_view items_prefix = "/api/items/";
    if (path.starts_with(items_prefix) && path.size() > items_prefix.size()) {
      const auto id = path.substr(items_prefix.size());
      return {200, export_item_detail_json(item_detail(s.corpus, s.network, s.assignment, id))};
    }
    return error_response(404, "no such endpoint: " + std::string(path));
  } catch (const NotFound& e) {
    return error_response(404, e.what());
  } catch (const InvalidArgument& e) {
    return error_response(400, e.what());
  } catch (const Error& e) {
    return error_response(500, e.what());
  }
}

}  // namespace atlas
