#pragma once

#include <string>

#include "atlas/analytics.hpp"
#include "atlas/layout.hpp"
#include "atlas/network.hpp"

namespace atlas {

struct RenderStyle {
  std::string register_color = "#1f77b4";
  std::string operation_color = "#ff7f0e";
  std::string keyword_color = "#7f7f7f";
  std::string cell_stroke = "#444444";
  std::string font_family = "sans-serif";
  double font_size = 11.0;
  double node_radius = 5.0;
  // Bar charts only; layouts use the layout's own viewport.
  double chart_width = 720.0;
  double chart_height = 360.0;

  // Throws InvalidArgument when the register and operation colors coincide.
  void validate() const;
};

// Grouped bars per bucket (registers, then operations). Independent mode renders the
// two separately sorted series as two aligned charts side by side. Every bar is a
// <rect class="bar ..."> carrying data-bucket and data-count attributes.
std::string render_bars_svg(const ThemeSummary& summary, const RenderStyle& style = {});

// One <circle class="node ..."> per node with a <title> of "name (type)". Grouped
// layouts add one <rect class="cell"> plus label per treemap cell; radial layouts add
// the inner/outer/border rings as paths and a center mark. Throws InvalidArgument when
// the layout does not place exactly the network's nodes.
std::string render_layout_svg(const LayoutResult& layout, const ThematicNetwork& network,
                              const RenderStyle& style = {});

}  // namespace atlas
