#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "declutter/geometry.h"
#include "declutter/graph.h"

namespace declutter {

using PointSet = std::vector<Point>;

struct Triangulation {
  PointSet points;
  // Counter-clockwise vertex triples.
  std::vector<std::array<int, 3>> triangles;

  Graph ToGraph() const;
};

// A generated graph together with the coordinates it was built from.
struct EmbeddedGraph {
  Graph graph;
  PointSet positions;
};

// rows x cols lattice, node id r*cols + c. Throws InvalidSize below 2x2.
Graph GenerateGrid(int rows, int cols);

// Adds floor(fraction * n) edges between random non-adjacent node pairs,
// flagged as augmenting. Throws NotEnoughPairs.
Graph Augment(const Graph& g, double fraction, std::uint64_t seed);

// n points uniform in the unit square with 1e-9 jitter on every coordinate.
PointSet RandomPointSet(int n, std::uint64_t seed);

// Incremental Bowyer-Watson. Throws DegenerateInput for fewer than three
// points, duplicate points or an all-collinear input.
Triangulation DelaunayTriangulate(std::span<const Point> points);
Graph Delaunay(std::span<const Point> points);

EmbeddedGraph GenerateTriangulation(int n, std::uint64_t seed);

// Triangulation of floor(0.7 n) base points (three of them the corners of an
// enclosing triangle) refined by repeatedly dropping clusters of points into
// random triangles and triangulating each cluster with the triangle's corners.
EmbeddedGraph GenerateDeepTriangulation(int n, std::uint64_t seed);

enum class Family { kGrid, kTriangulation, kDeepTriangulation };

std::string_view FamilyName(Family family);
Family ParseFamily(std::string_view name);

struct GenSpec {
  Family family = Family::kGrid;
  int rows = 0;   // grids
  int cols = 0;   // grids
  int nodes = 0;  // triangulations
  double augment_fraction = 0.1;
  std::uint64_t seed = 0;
};

struct GeneratedInstance {
  Graph planar;
  // Augmented version; only for grids and triangulations.
  std::optional<Graph> augmented;
  PointSet positions;  // empty for grids
};

GeneratedInstance Generate(const GenSpec& spec);

}  // namespace declutter
