#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "declutter/graph.h"
#include "declutter/layout.h"

namespace declutter {

struct Fa2Params {
  int iterations = 2000;
  double repulsion = 1.0;  // k_r
  double gravity = 1.0;    // k_g; 0 disables gravity
  // Attraction along an edge is multiplied by weight^weight_exponent. With
  // the default -1 a weight acts as a desired length (heavier = longer).
  double weight_exponent = -1.0;
  double jitter_tolerance = 1.0;
  double initial_speed = 1.0;
  double max_displacement = 10.0;  // per node per iteration
};

// Net force on every node for the given positions: linear attraction along
// edges, degree-scaled repulsion (deg(u)+1)(deg(v)+1)/distance between all
// pairs, and constant-magnitude gravity toward the centroid.
std::vector<Point> Fa2Forces(const Graph& g, std::span<const Point> coords,
                             const Fa2Params& params);

// ForceAtlas2-style simulation with adaptive global speed and per-node
// swing damping. Runs exactly params.iterations steps. Throws
// NumericalDivergence on non-finite coordinates.
Layout ForceAtlas2(const Graph& g, const Layout& init, const Fa2Params& params);

enum class PairWeighting {
  kInverseSquare,  // w_ij = d_ij^-2
  kNeighborhood,   // adjacent pairs additionally scaled by the neighborhood weight
};

struct SmParams {
  int iterations = 2000;
  double tolerance = 1e-7;  // relative stress improvement to stop at
  PairWeighting weighting = PairWeighting::kInverseSquare;
};

// Target distances and pair weights for weighted stress. Edge weights are
// edge lengths; disconnected pairs are skipped.
class StressModel {
 public:
  StressModel(const Graph& g, PairWeighting weighting);

  double Stress(std::span<const Point> coords) const;
  // One Gauss-Seidel majorization sweep over all nodes; never increases
  // stress in exact arithmetic.
  void Sweep(std::vector<Point>& coords) const;

  int size() const { return n_; }
  double distance(int i, int j) const { return dist_[Index(i, j)]; }
  double weight(int i, int j) const { return weight_[Index(i, j)]; }

 private:
  std::size_t Index(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_;
  std::vector<double> dist_;
  std::vector<double> weight_;  // 0 for skipped pairs
};

// Weighted stress majorization from `init`. When `stress_trace` is given it
// receives the stress before the first sweep and after every sweep.
Layout StressMajorization(const Graph& g, const Layout& init,
                          const SmParams& params,
                          std::vector<double>* stress_trace = nullptr);

}  // namespace declutter
