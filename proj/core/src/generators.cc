#include "declutter/generators.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

#include <fmt/format.h>

#include "declutter/error.h"
#include "declutter/random.h"

namespace declutter {

Graph GenerateGrid(int rows, int cols) {
  if (rows < 2 || cols < 2) {
    throw Error(ErrorCode::kInvalidSize,
                fmt::format("grid {}x{} (need at least 2x2)", rows, cols));
  }
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const NodeId id = r * cols + c;
      if (c + 1 < cols) g.AddEdge(id, id + 1);
      if (r + 1 < rows) g.AddEdge(id, id + cols);
    }
  }
  return g;
}

Graph Augment(const Graph& g, double fraction, std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidSize,
                fmt::format("augment fraction {} outside [0,1)", fraction));
  }
  const int n = g.num_nodes();
  const int count = static_cast<int>(std::floor(fraction * n));
  std::vector<std::pair<NodeId, NodeId>> candidates;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (!g.HasEdge(u, v)) candidates.emplace_back(u, v);
    }
  }
  if (static_cast<int>(candidates.size()) < count) {
    throw Error(ErrorCode::kNotEnoughPairs,
                fmt::format("need {} non-adjacent pairs, have {}", count,
                            candidates.size()));
  }
  Rng rng(seed);
  Graph out = g;
  for (int i = 0; i < count; ++i) {
    const int pick = UniformInt(rng, i, static_cast<int>(candidates.size()) - 1);
    std::swap(candidates[i], candidates[pick]);
    out.AddEdge(candidates[i].first, candidates[i].second, 1.0, true);
  }
  return out;
}

PointSet RandomPointSet(int n, std::uint64_t seed) {
  Rng rng(seed);
  PointSet points;
  points.reserve(n);
  auto coord = [&rng] {
    const double base = Uniform01(rng);
    const double jitter = 1e-9 * (Uniform01(rng) - 0.5);
    return std::clamp(base + jitter, 0.0, 1.0);
  };
  while (static_cast<int>(points.size()) < n) {
    const Point p{coord(), coord()};
    if (std::find(points.begin(), points.end(), p) == points.end()) {
      points.push_back(p);
    }
  }
  return points;
}

Graph Triangulation::ToGraph() const {
  Graph g(static_cast<int>(points.size()));
  for (const auto& t : triangles) {
    for (int k = 0; k < 3; ++k) {
      const int a = t[k];
      const int b = t[(k + 1) % 3];
      if (!g.HasEdge(a, b)) g.AddEdge(a, b);
    }
  }
  return g;
}

namespace {

// > 0 iff d lies strictly inside the circumcircle of counter-clockwise abc.
double InCircle(Point a, Point b, Point c, Point d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;
  const double ad = adx * adx + ady * ady;
  const double bd = bdx * bdx + bdy * bdy;
  const double cd = cdx * cdx + cdy * cdy;
  return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
         ad * (bdx * cdy - bdy * cdx);
}

void CheckTriangulable(std::span<const Point> points) {
  if (points.size() < 3) {
    throw Error(ErrorCode::kDegenerateInput,
                fmt::format("{} points (need at least 3)", points.size()));
  }
  std::set<std::pair<double, double>> seen;
  for (const Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::kDegenerateInput, "non-finite coordinate");
    }
    if (!seen.emplace(p.x, p.y).second) {
      throw Error(ErrorCode::kDegenerateInput,
                  fmt::format("duplicate point ({}, {})", p.x, p.y));
    }
  }
  // Collinearity relative to the point set's extent.
  const Point a = points[0];
  std::size_t far = 1;
  for (std::size_t i = 2; i < points.size(); ++i) {
    if (Norm(points[i] - a) > Norm(points[far] - a)) far = i;
  }
  const Point b = points[far];
  const double len = Norm(b - a);
  for (const Point& p : points) {
    if (std::abs(Orientation(a, b, p)) > 1e-12 * len * len) return;
  }
  throw Error(ErrorCode::kDegenerateInput, "all points collinear");
}

}  // namespace

Triangulation DelaunayTriangulate(std::span<const Point> points) {
  CheckTriangulable(points);
  const int n = static_cast<int>(points.size());

  double min_x = points[0].x, max_x = points[0].x;
  double min_y = points[0].y, max_y = points[0].y;
  for (const Point& p : points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  const Point center{0.5 * (min_x + max_x), 0.5 * (min_y + max_y)};
  // The super-triangle sits far enough away that only hull points within
  // ~1e-6 of a hull edge could be misclassified.
  const double big = 1e4 * extent;

  std::vector<Point> pts(points.begin(), points.end());
  pts.push_back({center.x - 2.0 * big, center.y - big});
  pts.push_back({center.x + 2.0 * big, center.y - big});
  pts.push_back({center.x, center.y + 2.0 * big});

  std::vector<std::array<int, 3>> tris = {{n, n + 1, n + 2}};
  std::vector<std::array<int, 3>> keep;
  std::map<std::pair<int, int>, int> cavity_edges;
  for (int i = 0; i < n; ++i) {
    const Point p = pts[i];
    keep.clear();
    cavity_edges.clear();
    for (const auto& t : tris) {
      if (InCircle(pts[t[0]], pts[t[1]], pts[t[2]], p) > 0.0) {
        for (int k = 0; k < 3; ++k) {
          ++cavity_edges[{t[k], t[(k + 1) % 3]}];
        }
      } else {
        keep.push_back(t);
      }
    }
    for (const auto& [edge, count] : cavity_edges) {
      if (cavity_edges.contains({edge.second, edge.first})) continue;
      keep.push_back({edge.first, edge.second, i});
    }
    tris.swap(keep);
  }

  Triangulation out;
  out.points.assign(points.begin(), points.end());
  for (const auto& t : tris) {
    if (t[0] < n && t[1] < n && t[2] < n) out.triangles.push_back(t);
  }
  return out;
}

Graph Delaunay(std::span<const Point> points) {
  return DelaunayTriangulate(points).ToGraph();
}

EmbeddedGraph GenerateTriangulation(int n, std::uint64_t seed) {
  if (n < 3) {
    throw Error(ErrorCode::kInvalidSize, fmt::format("triangulation n={}", n));
  }
  PointSet points = RandomPointSet(n, seed);
  Graph g = Delaunay(points);
  return {std::move(g), std::move(points)};
}

namespace {

// Uniform point strictly inside triangle abc.
Point SampleInside(Rng& rng, Point a, Point b, Point c) {
  constexpr double kMargin = 1e-3;
  for (;;) {
    double s = Uniform01(rng);
    double t = Uniform01(rng);
    if (s + t > 1.0) {
      s = 1.0 - s;
      t = 1.0 - t;
    }
    if (s > kMargin && t > kMargin && 1.0 - s - t > kMargin) {
      return a + s * (b - a) + t * (c - a);
    }
  }
}

}  // namespace

EmbeddedGraph GenerateDeepTriangulation(int n, std::uint64_t seed) {
  if (n < 10) {
    throw Error(ErrorCode::kInvalidSize,
                fmt::format("deep triangulation n={} (need at least 10)", n));
  }
  Rng rng(seed);
  const int base = static_cast<int>(std::floor(0.7 * n));

  const Point corner_a{0.0, 0.0};
  const Point corner_b{1.0, 0.0};
  const Point corner_c{0.5, std::sqrt(3.0) / 2.0};
  PointSet points = {corner_a, corner_b, corner_c};
  while (static_cast<int>(points.size()) < base) {
    const Point p = SampleInside(rng, corner_a, corner_b, corner_c);
    if (std::find(points.begin(), points.end(), p) == points.end()) {
      points.push_back(p);
    }
  }
  Triangulation tri = DelaunayTriangulate(points);

  int remaining = n - base;
  while (remaining > 0) {
    const int r = remaining < 3 ? remaining : UniformInt(rng, 3, remaining);
    const int host_index =
        UniformInt(rng, 0, static_cast<int>(tri.triangles.size()) - 1);
    const std::array<int, 3> host = tri.triangles[host_index];

    // Local ids 0..2 are the host corners, 3.. the new interior points.
    PointSet local = {tri.points[host[0]], tri.points[host[1]],
                      tri.points[host[2]]};
    std::vector<int> global_id(host.begin(), host.end());
    while (static_cast<int>(local.size()) < r + 3) {
      const Point p = SampleInside(rng, local[0], local[1], local[2]);
      if (std::find(local.begin(), local.end(), p) != local.end()) continue;
      local.push_back(p);
      global_id.push_back(static_cast<int>(tri.points.size()));
      tri.points.push_back(p);
    }
    const Triangulation inner = DelaunayTriangulate(local);

    tri.triangles.erase(tri.triangles.begin() + host_index);
    for (const auto& t : inner.triangles) {
      tri.triangles.push_back(
          {global_id[t[0]], global_id[t[1]], global_id[t[2]]});
    }
    remaining -= r;
  }
  Graph g = tri.ToGraph();
  return {std::move(g), std::move(tri.points)};
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kGrid: return "grid";
    case Family::kTriangulation: return "triangulation";
    case Family::kDeepTriangulation: return "deep-triangulation";
  }
  return "unknown";
}

Family ParseFamily(std::string_view name) {
  if (name == "grid") return Family::kGrid;
  if (name == "triangulation") return Family::kTriangulation;
  if (name == "deep-triangulation") return Family::kDeepTriangulation;
  throw Error(ErrorCode::kInvalidConfig,
              fmt::format("unknown family '{}'", name));
}

GeneratedInstance Generate(const GenSpec& spec) {
  GeneratedInstance out;
  const std::uint64_t augment_seed = DeriveSeed(spec.seed, {1});
  switch (spec.family) {
    case Family::kGrid:
      out.planar = GenerateGrid(spec.rows, spec.cols);
      out.augmented = Augment(out.planar, spec.augment_fraction, augment_seed);
      break;
    case Family::kTriangulation: {
      EmbeddedGraph tri = GenerateTriangulation(spec.nodes, spec.seed);
      out.planar = std::move(tri.graph);
      out.positions = std::move(tri.positions);
      out.augmented = Augment(out.planar, spec.augment_fraction, augment_seed);
      break;
    }
    case Family::kDeepTriangulation: {
      EmbeddedGraph deep = GenerateDeepTriangulation(spec.nodes, spec.seed);
      out.planar = std::move(deep.graph);
      out.positions = std::move(deep.positions);
      break;
    }
  }
  return out;
}

}  // namespace declutter
