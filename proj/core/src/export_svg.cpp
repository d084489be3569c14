#include <algorithm>
#include <cstdio>
#include <string_view>
#include <unordered_map>

#include "atlas/error.hpp"
#include "atlas/svg.hpp"

namespace atlas {

void RenderStyle::validate() const {
  if (register_color == operation_color) throw InvalidArgument("register and operation colors must differ");
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&apos;";
        break;
      default:
        // XML 1.0 forbids most C0 controls.
        if (static_cast<unsigned char>(c) < 0x20 && c != '\t' && c != '\n' && c != '\r') {
          out += ' ';
        } else {
          out += c;
        }
    }
  }
  return out;
}

class SvgWriter {
 public:
  SvgWriter(double width, double height, const RenderStyle& style) {
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
            num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\" font-family=\"" +
            escape(style.font_family) + "\" font-size=\"" + num(style.font_size) + "\">\n";
  }

  void line(double x1, double y1, double x2, double y2, std::string_view cls) {
    out_ += "  <line class=\"" + std::string(cls) + "\" x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" +
            num(x2) + "\" y2=\"" + num(y2) + "\" stroke=\"#333333\"/>\n";
  }

  void text(double x, double y, std::string_view body, std::string_view cls, std::string_view anchor = "start",
            double rotate = 0.0) {
    out_ += "  <text class=\"" + std::string(cls) + "\" x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" +
            std::string(anchor) + "\"";
    if (rotate != 0.0) out_ += " transform=\"rotate(" + num(rotate) + " " + num(x) + " " + num(y) + ")\"";
    out_ += ">" + escape(body) + "</text>\n";
  }

  void raw(std::string_view s) { out_ += s; }

  std::string finish() {
    out_ += "</svg>\n";
    return std::move(out_);
  }

 private:
  std::string out_;
};

struct Bar {
  std::string bucket;
  std::size_t count;
  bool registers;
};

// Draws one chart of bar groups inside [x0, x0 + width].
void draw_chart(SvgWriter& svg, const RenderStyle& style, double x0, double width, const std::string& title,
                const std::vector<std::vector<Bar>>& groups) {
  constexpr double kTop = 30.0;
  constexpr double kBottom = 100.0;
  constexpr double kLeft = 40.0;
  constexpr double kRight = 10.0;
  const double plot_top = kTop;
  const double plot_bottom = style.chart_height - kBottom;
  const double plot_height = plot_bottom - plot_top;
  const double plot_left = x0 + kLeft;
  const double plot_width = width - kLeft - kRight;

  std::size_t max_count = 0;
  for (const auto& group : groups) {
    for (const auto& bar : group) max_count = std::max(max_count, bar.count);
  }

  svg.text(x0 + width / 2.0, kTop - 12.0, title, "chart-title", "middle");
  svg.line(plot_left, plot_top, plot_left, plot_bottom, "axis y-axis");
  svg.line(plot_left, plot_bottom, plot_left + plot_width, plot_bottom, "axis x-axis");
  svg.text(plot_left - 4.0, plot_bottom + 4.0, "0", "tick", "end");
  if (max_count > 0) svg.text(plot_left - 4.0, plot_top + 4.0, std::to_string(max_count), "tick", "end");

  if (groups.empty()) return;
  const double slot = plot_width / static_cast<double>(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& group = groups[g];
    const double bar_width = slot * 0.8 / static_cast<double>(group.size());
    const double group_left = plot_left + slot * static_cast<double>(g) + slot * 0.1;
    for (std::size_t b = 0; b < group.size(); ++b) {
      const Bar& bar = group[b];
      const double h =
          max_count == 0 ? 0.0 : plot_height * static_cast<double>(bar.count) / static_cast<double>(max_count);
      const double x = group_left + bar_width * static_cast<double>(b);
      const std::string_view series = bar.registers ? "register" : "operation";
      const std::string& color = bar.registers ? style.register_color : style.operation_color;
      svg.raw("  <rect class=\"bar " + std::string(series) + "\" data-bucket=\"" + escape(bar.bucket) +
              "\" data-count=\"" + std::to_string(bar.count) + "\" x=\"" + num(x) + "\" y=\"" +
              num(plot_bottom - h) + "\" width=\"" + num(bar_width) + "\" height=\"" + num(h) + "\" fill=\"" +
              escape(color) + "\"><title>" + escape(bar.bucket) + " (" + std::string(series) +
              "s): " + std::to_string(bar.count) + "</title></rect>\n");
    }
    const double label_x = plot_left + slot * (static_cast<double>(g) + 0.5);
    svg.text(label_x, plot_bottom + 12.0, group.front().bucket, "bucket-label", "end", -45.0);
  }
}

}  // namespace

std::string render_bars_svg(const ThemeSummary& summary, const RenderStyle& style) {
  style.validate();
  SvgWriter svg(style.chart_width, style.chart_height, style);
  const std::string grouping(to_string(summary.grouping));

  if (summary.order_mode == OrderMode::Independent) {
    std::vector<std::vector<Bar>> registers;
    std::vector<std::vector<Bar>> operations;
    for (const auto& e : summary.registers_sorted) registers.push_back({{e.bucket, e.count, true}});
    for (const auto& e : summary.operations_sorted) operations.push_back({{e.bucket, e.count, false}});
    const double half = style.chart_width / 2.0;
    draw_chart(svg, style, 0.0, half, "registers by " + grouping, registers);
    draw_chart(svg, style, half, half, "operations by " + grouping, operations);
  } else {
    std::vector<std::vector<Bar>> groups;
    for (const auto& row : summary.rows) {
      groups.push_back({{row.bucket, row.registers, true}, {row.bucket, row.operations, false}});
    }
    draw_chart(svg, style, 0.0, style.chart_width, "items by " + grouping, groups);
  }
  return svg.finish();
}

std::string render_layout_svg(const LayoutResult& layout, const ThematicNetwork& network, const RenderStyle& style) {
  style.validate();
  if (layout.nodes.size() != network.nodes.size()) {
    throw InvalidArgument("layout places " + std::to_string(layout.nodes.size()) + " nodes but the network has " +
                          std::to_string(network.nodes.size()));
  }
  std::unordered_map<std::string_view, const PlacedNode*> placed;
  for (const auto& node : layout.nodes) placed.emplace(node.id, &node);

  const auto& vp = layout.params.viewport;
  SvgWriter svg(vp.width, vp.height, style);

  if (layout.kind == LayoutKind::GroupedTreemap) {
    for (const auto& cell : layout.cells) {
      const auto& r = cell.rect;
      svg.raw("  <rect class=\"cell\" data-theme=\"" + escape(cell.label) + "\" x=\"" + num(r.x) + "\" y=\"" +
              num(r.y) + "\" width=\"" + num(r.width) + "\" height=\"" + num(r.height) +
              "\" fill=\"none\" stroke=\"" + escape(style.cell_stroke) + "\"/>\n");
      svg.text(r.x + 4.0, r.y + style.font_size + 2.0, cell.label, "cell-label");
    }
  }
  if (layout.kind == LayoutKind::Radial) {
    const Vec2 c = layout.center;
    for (const auto& [cls, radius] : {std::pair{"ring inner", layout.rings.inner},
                                      std::pair{"ring outer", layout.rings.outer},
                                      std::pair{"ring border", layout.rings.border}}) {
      svg.raw("  <path class=\"" + std::string(cls) + "\" d=\"M " + num(c.x - radius) + " " + num(c.y) + " a " +
              num(radius) + " " + num(radius) + " 0 1 0 " + num(2.0 * radius) + " 0 a " + num(radius) + " " +
              num(radius) + " 0 1 0 " + num(-2.0 * radius) + " 0\" fill=\"none\" stroke=\"#bbbbbb\"/>\n");
    }
    svg.raw("  <path class=\"center\" d=\"M " + num(c.x - 4.0) + " " + num(c.y) + " h 8 M " + num(c.x) + " " +
            num(c.y - 4.0) + " v 8\" stroke=\"#333333\"/>\n");
    if (!layout.keyword.empty()) svg.text(c.x, 16.0, layout.keyword, "keyword-label", "middle");
  }

  for (const auto& node : network.nodes) {
    const auto it = placed.find(node.id);
    if (it == placed.end()) throw InvalidArgument("layout has no position for node '" + node.id + "'");
    const Vec2 p = it->second->position;
    std::string type;
    std::string color;
    if (node.role == NodeRole::Keyword) {
      type = "keyword";
      color = style.keyword_color;
    } else {
      type = std::string(to_string(node.kind));
      color = node.kind == ItemKind::AdministrativeRegister ? style.register_color : style.operation_color;
    }
    svg.raw("  <circle class=\"node " + type + "\" data-id=\"" + escape(node.id) + "\" cx=\"" + num(p.x) +
            "\" cy=\"" + num(p.y) + "\" r=\"" + num(style.node_radius) + "\" fill=\"" + escape(color) +
            "\"><title>" + escape(node.label) + " (" + type + ")</title></circle>\n");
  }
  return svg.finish();
}

}  // namespace atlas
