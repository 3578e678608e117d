#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "declutter/disjoint_paths.h"
#include "declutter/graph.h"
#include "declutter/isolation_forest.h"

namespace declutter {

enum class Aggregate { kMin, kMax, kMean };

std::string_view AggregateName(Aggregate m);
Aggregate ParseAggregate(std::string_view name);

// min / max / mean of a non-empty list; throws EmptyFootprint.
double ApplyAggregate(std::span<const double> values, Aggregate m);
double ApplyAggregate(const Footprint& f, Aggregate m);

// Stretches or contracts a footprint of length l to exactly k entries:
//   l < k: f followed by (k - l) copies of M(f)
//   l = k: f
//   l > k: f[0 .. k-2] followed by M(f[k-1 .. l-1])
// Throws EmptyFootprint (and InvalidConfig for k < 1).
FeatureRow NormalizeFootprint(const Footprint& f, int k, Aggregate m);

struct HeuristicParams {
  int k = 4;
  Aggregate aggregate = Aggregate::kMin;
  IsolationForestParams forest;
  std::uint64_t seed = 0;
};

struct WeightingResult {
  Graph weighted;
  std::vector<Footprint> footprints;  // per edge
  std::vector<FeatureRow> features;   // per edge; empty row for bridges
  std::vector<double> scores;         // per edge; NaN for bridges
  std::vector<bool> outlier;          // per edge
  HeuristicParams params;

  int num_outliers() const;
};

// Outlier edges get weight M(f(e)); every other edge, bridges included,
// gets weight 1. The forest is fit on the feature vectors of all non-bridge
// edges of `g`.
WeightingResult WeightHeuristic(const Graph& g, const HeuristicParams& params);
// Same, reusing precomputed footprints (one per edge of g).
WeightingResult WeightHeuristic(const Graph& g,
                                std::vector<Footprint> footprints,
                                const HeuristicParams& params);

// |N_u ∪ N_v| - |N_u ∩ N_v| for any node pair.
double NeighborhoodWeight(const Graph& g, NodeId u, NodeId v);
// The same value for every edge, as a weighted copy of g.
Graph WeightNeighborhood(const Graph& g);

// Augmenting edges get weight w, all others 1. Throws NoAugEdges.
Graph WeightFixed(const Graph& g, double w);

// One line per edge: `u v aug | footprint | features | score | flag | weight`.
void WriteWeightingReport(std::ostream& out, const WeightingResult& result);

}  // namespace declutter
