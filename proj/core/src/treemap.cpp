#include <algorithm>
#include <cmath>
#include <numeric>

#include "atlas/error.hpp"
#include "atlas/layout.hpp"

namespace atlas {

namespace {

// Worst aspect ratio of a row of areas laid along a side of length `side`.
double worst_ratio(double sum, double min_area, double max_area, double side) {
  const double side2 = side * side;
  const double sum2 = sum * sum;
  return std::max(side2 * max_area / sum2, sum2 / (side2 * min_area));
}

// Places `row` (indices into areas) along the shorter side of `remaining` and returns
// the leftover rectangle. When `fill` is set the row takes the whole remaining rect,
// which keeps the final tiling exact.
Rect place_row(std::span<const std::size_t> row, std::span<const double> areas, const Rect& remaining,
               bool fill, std::vector<Rect>& out) {
  const double sum = std::accumulate(row.begin(), row.end(), 0.0,
                                     [&](double acc, std::size_t i) { return acc + areas[i]; });
  const bool wide = remaining.width >= remaining.height;
  if (wide) {
    // Column on the left, cells stacked top to bottom.
    const double column = fill ? remaining.width : sum / remaining.height;
    double y = remaining.y;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const bool last = k + 1 == row.size();
      const double h = last ? remaining.y + remaining.height - y : areas[row[k]] / column;
      out[row[k]] = {remaining.x, y, column, h};
      y += h;
    }
    return {remaining.x + column, remaining.y, remaining.width - column, remaining.height};
  }
  const double band = fill ? remaining.height : sum / remaining.width;
  double x = remaining.x;
  for (std::size_t k = 0; k < row.size(); ++k) {
    const bool last = k + 1 == row.size();
    const double w = last ? remaining.x + remaining.width - x : areas[row[k]] / band;
    out[row[k]] = {x, remaining.y, w, band};
    x += w;
  }
  return {remaining.x, remaining.y + band, remaining.width, remaining.height - band};
}

std::vector<Rect> squarify(std::span<const double> areas, const Rect& rect) {
  std::vector<std::size_t> order(areas.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return areas[a] > areas[b]; });

  std::vector<Rect> out(areas.size());
  Rect remaining = rect;
  std::vector<std::size_t> row;
  double row_sum = 0.0;
  double row_min = 0.0;
  double row_max = 0.0;

  for (std::size_t k = 0; k < order.size(); ++k) {
    const double a = areas[order[k]];
    const double side = std::min(remaining.width, remaining.height);
    if (!row.empty()) {
      const double current = worst_ratio(row_sum, row_min, row_max, side);
      const double extended = worst_ratio(row_sum + a, std::min(row_min, a), std::max(row_max, a), side);
      if (extended > current) {
        remaining = place_row(row, areas, remaining, false, out);
        row.clear();
      }
    }
    if (row.empty()) {
      row_sum = 0.0;
      row_min = a;
      row_max = a;
    }
    row.push_back(order[k]);
    row_sum += a;
    row_min = std::min(row_min, a);
    row_max = std::max(row_max, a);
  }
  if (!row.empty()) place_row(row, areas, remaining, true, out);
  return out;
}

std::vector<Rect> slice_and_dice(std::span<const double> areas, const Rect& rect) {
  std::vector<Rect> out;
  out.reserve(areas.size());
  const double total = std::accumulate(areas.begin(), areas.end(), 0.0);
  const bool horizontal = rect.width >= rect.height;
  double offset = 0.0;
  for (std::size_t i = 0; i < areas.size(); ++i) {
    const bool last = i + 1 == areas.size();
    if (horizontal) {
      const double w = last ? rect.width - offset : rect.width * areas[i] / total;
      out.push_back({rect.x + offset, rect.y, w, rect.height});
      offset += w;
    } else {
      const double h = last ? rect.height - offset : rect.height * areas[i] / total;
      out.push_back({rect.x, rect.y + offset, rect.width, h});
      offset += h;
    }
  }
  return out;
}

}  // namespace

std::vector<TreemapCell> treemap_partition(std::span<const std::pair<std::string, double>> weights,
                                           const Rect& rect, TreemapAlgorithm algorithm) {
  if (weights.empty()) throw InvalidArgument("treemap needs at least one weight");
  if (!(rect.width > 0.0 && rect.height > 0.0)) throw InvalidArgument("treemap rectangle must be positive");
  double total = 0.0;
  for (const auto& [label, w] : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw InvalidArgument("treemap weight for '" + label + "' must be positive and finite");
    }
    total += w;
  }

  std::vector<double> areas;
  areas.reserve(weights.size());
  for (const auto& entry : weights) areas.push_back(entry.second / total * rect.area());

  const auto rects = algorithm == TreemapAlgorithm::Squarified ? squarify(areas, rect) : slice_and_dice(areas, rect);
  std::vector<TreemapCell> cells;
  cells.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) cells.push_back({weights[i].first, rects[i], weights[i].second});
  return cells;
}

}  // namespace atlas
