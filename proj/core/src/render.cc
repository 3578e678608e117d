#include "declutter/render.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "declutter/error.h"

namespace declutter {

namespace {

// Appends the body of one drawing whose canvas starts at (ox, oy).
void AppendDrawing(std::string& svg, const Graph& g, const Layout& layout,
                   const RenderOptions& opt, double ox, double oy) {
  if (layout.size() != g.num_nodes()) {
    throw Error(ErrorCode::kMismatchedFiles,
                fmt::format("layout has {} points but graph has {} nodes",
                            layout.size(), g.num_nodes()));
  }
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  if (!layout.coords.empty()) {
    min_x = max_x = layout.coords[0].x;
    min_y = max_y = layout.coords[0].y;
  }
  for (const Point& p : layout.coords) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double inner_w = opt.width * (1.0 - 2.0 * opt.margin);
  const double inner_h = opt.height * (1.0 - 2.0 * opt.margin);
  const double span_x = max_x - min_x;
  const double span_y = max_y - min_y;
  double scale = 1.0;
  if (span_x > 0.0 || span_y > 0.0) {
    scale = std::min(span_x > 0.0 ? inner_w / span_x : INFINITY,
                     span_y > 0.0 ? inner_h / span_y : INFINITY);
  }
  // Center the drawing; y grows downward in SVG.
  const double off_x = ox + opt.width * opt.margin + 0.5 * (inner_w - scale * span_x);
  const double off_y = oy + opt.height * opt.margin + 0.5 * (inner_h - scale * span_y);
  auto sx = [&](const Point& p) { return off_x + scale * (p.x - min_x); };
  auto sy = [&](const Point& p) { return off_y + scale * (max_y - p.y); };

  if (!opt.title.empty()) {
    svg += fmt::format(
        "<text x=\"{:.3f}\" y=\"{:.3f}\" font-family=\"sans-serif\" "
        "font-size=\"14\">{}</text>\n",
        ox + 4.0, oy + 16.0, opt.title);
  }
  for (const Edge& e : g.edges()) {
    const Point& a = layout.coords[e.u];
    const Point& b = layout.coords[e.v];
    svg += fmt::format(
        "<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" "
        "stroke=\"{}\" stroke-width=\"{:.3f}\"/>\n",
        sx(a), sy(a), sx(b), sy(b),
        e.augmenting ? opt.augmenting_color : opt.edge_color, opt.edge_width);
  }
  for (const Point& p : layout.coords) {
    svg += fmt::format(
        "<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.3f}\" fill=\"{}\"/>\n",
        sx(p), sy(p), opt.node_radius, opt.node_color);
  }
}

std::string Header(double width, double height) {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" "
      "height=\"{:.0f}\" viewBox=\"0 0 {:.0f} {:.0f}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      width, height, width, height);
}

}  // namespace

std::string RenderSvg(const Graph& g, const Layout& layout,
                      const RenderOptions& options) {
  std::string svg = Header(options.width, options.height);
  AppendDrawing(svg, g, layout, options, 0.0, 0.0);
  svg += "</svg>\n";
  return svg;
}

std::string RenderPanel(const std::vector<PanelItem>& items, int columns,
                        const RenderOptions& cell) {
  columns = std::max(1, columns);
  const int rows = static_cast<int>((items.size() + columns - 1) / columns);
  std::string svg = Header(cell.width * columns, cell.height * std::max(1, rows));
  for (std::size_t i = 0; i < items.size(); ++i) {
    RenderOptions opt = cell;
    opt.title = items[i].title;
    AppendDrawing(svg, *items[i].graph, *items[i].layout, opt,
                  cell.width * static_cast<double>(i % columns),
                  cell.height * static_cast<double>(i / columns));
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace declutter
