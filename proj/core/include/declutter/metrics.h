#pragma once

#include <optional>
#include <span>

#include "declutter/geometry.h"
#include "declutter/graph.h"

namespace declutter {

// Number of unordered edge pairs whose segments cross at a point interior to
// both. Pairs sharing an endpoint never count. Throws DegenerateGeometry for
// collinear overlapping segments.
int CountCrossings(const Graph& g, std::span<const Point> coords);

// Minimum angle between two edges incident to a common node, divided by
// 2*pi / max degree. Throws NoIncidentPairs when max degree < 2.
double AngularResolution(const Graph& g, std::span<const Point> coords);

// Minimum acute crossing angle divided by pi/2; nullopt for a planar drawing.
std::optional<double> CrossingResolution(const Graph& g,
                                         std::span<const Point> coords);

// Residual of the best similarity transform (rotation, reflection, uniform
// scale, translation) of y onto x, normalized to [0, 1]:
//   1 - (sum of singular values of Xc^T Yc)^2 / (|Xc|^2 |Yc|^2).
// Throws DegenerateLayout if either layout collapses to a point and
// DimensionMismatch if sizes differ.
double ProcrustesStatistic(std::span<const Point> x, std::span<const Point> y);

struct MetricReport {
  int nc = 0;
  std::optional<double> ang_res;   // absent when max degree < 2
  std::optional<double> cros_res;  // absent iff nc == 0
  std::optional<double> ps;        // absent without a reference layout
};

MetricReport EvaluateLayout(const Graph& g, std::span<const Point> coords,
                            std::optional<std::span<const Point>> reference);

}  // namespace declutter
