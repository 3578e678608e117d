#include "declutter/metrics.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "declutter/error.h"

namespace declutter {

namespace {

bool ShareEndpoint(const Edge& a, const Edge& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

// Calls fn(edge a, edge b) for every properly crossing pair.
template <typename Fn>
void ForEachCrossing(const Graph& g, std::span<const Point> coords, Fn&& fn) {
  if (static_cast<int>(coords.size()) != g.num_nodes()) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("layout has {} points for {} nodes", coords.size(),
                            g.num_nodes()));
  }
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Point p1 = coords[edges[i].u];
    const Point p2 = coords[edges[i].v];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (ShareEndpoint(edges[i], edges[j])) continue;
      const Point q1 = coords[edges[j].u];
      const Point q2 = coords[edges[j].v];
      switch (ClassifySegments(p1, p2, q1, q2)) {
        case SegmentRelation::kCrossing:
          fn(edges[i], edges[j]);
          break;
        case SegmentRelation::kOverlapping:
          throw Error(ErrorCode::kDegenerateGeometry,
                      fmt::format("edges {{{},{}}} and {{{},{}}} overlap",
                                  edges[i].u, edges[i].v, edges[j].u,
                                  edges[j].v));
        default:
          break;
      }
    }
  }
}

}  // namespace

int CountCrossings(const Graph& g, std::span<const Point> coords) {
  int count = 0;
  ForEachCrossing(g, coords, [&](const Edge&, const Edge&) { ++count; });
  return count;
}

double AngularResolution(const Graph& g, std::span<const Point> coords) {
  const int max_degree = g.max_degree();
  if (max_degree < 2) {
    throw Error(ErrorCode::kNoIncidentPairs, "no node has two incident edges");
  }
  double best = std::numbers::pi;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const auto incident = g.incident(v);
    for (std::size_t i = 0; i < incident.size(); ++i) {
      const Point a = coords[incident[i].neighbor] - coords[v];
      for (std::size_t j = i + 1; j < incident.size(); ++j) {
        const Point b = coords[incident[j].neighbor] - coords[v];
        best = std::min(best, AngleBetween(a, b));
      }
    }
  }
  return best / (2.0 * std::numbers::pi / max_degree);
}

std::optional<double> CrossingResolution(const Graph& g,
                                         std::span<const Point> coords) {
  std::optional<double> best;
  ForEachCrossing(g, coords, [&](const Edge& a, const Edge& b) {
    double angle = AngleBetween(coords[a.v] - coords[a.u],
                                coords[b.v] - coords[b.u]);
    angle = std::min(angle, std::numbers::pi - angle);
    if (!best || angle < *best) best = angle;
  });
  if (best) *best /= std::numbers::pi / 2.0;
  return best;
}

double ProcrustesStatistic(std::span<const Point> x, std::span<const Point> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("layouts of {} and {} points", x.size(), y.size()));
  }
  const double n = static_cast<double>(x.size());
  Point cx, cy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cx = cx + x[i];
    cy = cy + y[i];
  }
  cx = (1.0 / n) * cx;
  cy = (1.0 / n) * cy;
  // Cross-covariance M = Xc^T Yc and total variances.
  double m00 = 0, m01 = 0, m10 = 0, m11 = 0, sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Point a = x[i] - cx;
    const Point b = y[i] - cy;
    m00 += a.x * b.x;
    m01 += a.x * b.y;
    m10 += a.y * b.x;
    m11 += a.y * b.y;
    sx += Dot(a, a);
    sy += Dot(b, b);
  }
  if (!(sx > 0.0) || !(sy > 0.0)) {
    throw Error(ErrorCode::kDegenerateLayout, "all points coincide");
  }
  if (std::equal(x.begin(), x.end(), y.begin())) return 0.0;
  // For a 2x2 matrix, (s1 + s2)^2 = |M|_F^2 + 2 |det M|.
  const double frobenius = m00 * m00 + m01 * m01 + m10 * m10 + m11 * m11;
  const double det = m00 * m11 - m01 * m10;
  const double trace_sq = frobenius + 2.0 * std::abs(det);
  return std::clamp(1.0 - trace_sq / (sx * sy), 0.0, 1.0);
}

MetricReport EvaluateLayout(const Graph& g, std::span<const Point> coords,
                            std::optional<std::span<const Point>> reference) {
  MetricReport report;
  report.nc = CountCrossings(g, coords);
  if (g.max_degree() >= 2) report.ang_res = AngularResolution(g, coords);
  report.cros_res = CrossingResolution(g, coords);
  if (reference) report.ps = ProcrustesStatistic(*reference, coords);
  return report;
}

}  // namespace declutter
