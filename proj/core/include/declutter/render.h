#pragma once

#include <string>
#include <vector>

#include "declutter/graph.h"
#include "declutter/layout.h"

namespace declutter {

struct RenderOptions {
  double width = 600.0;
  double height = 600.0;
  double margin = 0.05;  // fraction of each side
  double node_radius = 3.0;
  double edge_width = 1.0;
  std::string edge_color = "#555555";
  std::string augmenting_color = "#d62728";
  std::string node_color = "#1f77b4";
  std::string title;
};

// SVG drawing: nodes as circles, edges as lines, augmenting edges in
// `augmenting_color`. The layout is scaled uniformly to fit the canvas.
// Throws MismatchedFiles when the layout size differs from the node count.
std::string RenderSvg(const Graph& g, const Layout& layout,
                      const RenderOptions& options = {});

struct PanelItem {
  const Graph* graph;
  const Layout* layout;
  std::string title;
};

// Several drawings side by side in one SVG, `columns` per row.
std::string RenderPanel(const std::vector<PanelItem>& items, int columns,
                        const RenderOptions& cell = {});

}  // namespace declutter
