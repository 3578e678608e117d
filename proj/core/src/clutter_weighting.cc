#include "declutter/clutter_weighting.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>

#include "declutter/error.h"

namespace declutter {

std::string_view AggregateName(Aggregate m) {
  switch (m) {
    case Aggregate::kMin: return "min";
    case Aggregate::kMax: return "max";
    case Aggregate::kMean: return "mean";
  }
  return "unknown";
}

Aggregate ParseAggregate(std::string_view name) {
  if (name == "min") return Aggregate::kMin;
  if (name == "max") return Aggregate::kMax;
  if (name == "mean") return Aggregate::kMean;
  throw Error(ErrorCode::kInvalidConfig,
              fmt::format("unknown aggregate '{}'", name));
}

double ApplyAggregate(std::span<const double> values, Aggregate m) {
  if (values.empty()) {
    throw Error(ErrorCode::kEmptyFootprint, "aggregate of an empty list");
  }
  switch (m) {
    case Aggregate::kMin: return *std::min_element(values.begin(), values.end());
    case Aggregate::kMax: return *std::max_element(values.begin(), values.end());
    case Aggregate::kMean:
      return std::accumulate(values.begin(), values.end(), 0.0) /
             static_cast<double>(values.size());
  }
  return 0.0;
}

double ApplyAggregate(const Footprint& f, Aggregate m) {
  const std::vector<double> values(f.lengths.begin(), f.lengths.end());
  return ApplyAggregate(values, m);
}

FeatureRow NormalizeFootprint(const Footprint& f, int k, Aggregate m) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidConfig, fmt::format("k={} (need >= 1)", k));
  }
  if (f.empty()) {
    throw Error(ErrorCode::kEmptyFootprint,
                fmt::format("edge {{{},{}}} has no disjoint paths", f.u, f.v));
  }
  const FeatureRow values(f.lengths.begin(), f.lengths.end());
  const int l = static_cast<int>(values.size());
  if (l == k) return values;
  if (l < k) {
    FeatureRow out = values;
    out.resize(k, ApplyAggregate(values, m));
    return out;
  }
  FeatureRow out(values.begin(), values.begin() + (k - 1));
  out.push_back(ApplyAggregate(
      std::span<const double>(values).subspan(static_cast<std::size_t>(k - 1)),
      m));
  return out;
}

int WeightingResult::num_outliers() const {
  return static_cast<int>(std::count(outlier.begin(), outlier.end(), true));
}

WeightingResult WeightHeuristic(const Graph& g, const HeuristicParams& params) {
  return WeightHeuristic(g, AllFootprints(g), params);
}

WeightingResult WeightHeuristic(const Graph& g,
                                std::vector<Footprint> footprints,
                                const HeuristicParams& params) {
  const int m = g.num_edges();
  if (static_cast<int>(footprints.size()) != m) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("{} footprints for {} edges", footprints.size(), m));
  }
  WeightingResult result;
  result.params = params;
  result.weighted = g.Unweighted();
  result.features.resize(m);
  result.scores.assign(m, std::numeric_limits<double>::quiet_NaN());
  result.outlier.assign(m, false);

  std::vector<EdgeIndex> sampled;
  std::vector<FeatureRow> rows;
  for (EdgeIndex e = 0; e < m; ++e) {
    if (footprints[e].empty()) continue;
    result.features[e] =
        NormalizeFootprint(footprints[e], params.k, params.aggregate);
    sampled.push_back(e);
    rows.push_back(result.features[e]);
  }
  if (rows.size() >= 2) {
    const IsolationForest forest =
        IsolationForest::Fit(rows, params.forest, params.seed);
    for (std::size_t i = 0; i < sampled.size(); ++i) {
      const EdgeIndex e = sampled[i];
      result.scores[e] = forest.Score(rows[i]);
      if (result.scores[e] > forest.threshold()) {
        result.outlier[e] = true;
        result.weighted.set_weight(
            e, ApplyAggregate(footprints[e], params.aggregate));
      }
    }
  }
  result.footprints = std::move(footprints);
  return result;
}

double NeighborhoodWeight(const Graph& g, NodeId u, NodeId v) {
  const std::vector<NodeId> nu = g.neighbors(u);
  const std::vector<NodeId> nv = g.neighbors(v);
  std::vector<NodeId> both;
  std::vector<NodeId> either;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                        std::back_inserter(both));
  std::set_union(nu.begin(), nu.end(), nv.begin(), nv.end(),
                 std::back_inserter(either));
  return static_cast<double>(either.size()) - static_cast<double>(both.size());
}

Graph WeightNeighborhood(const Graph& g) {
  Graph out = g;
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    out.set_weight(e, NeighborhoodWeight(g, g.edge(e).u, g.edge(e).v));
  }
  return out;
}

Graph WeightFixed(const Graph& g, double w) {
  if (g.num_augmenting() == 0) {
    throw Error(ErrorCode::kNoAugEdges, "graph has no augmenting edges");
  }
  Graph out = g;
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    out.set_weight(e, g.edge(e).augmenting ? w : 1.0);
  }
  return out;
}

void WriteWeightingReport(std::ostream& out, const WeightingResult& result) {
  fmt::print(out, "# k={} M={} trees={} subsample={} threshold={} seed={}\n",
             result.params.k, AggregateName(result.params.aggregate),
             result.params.forest.num_trees,
             result.params.forest.subsample_size,
             result.params.forest.threshold, result.params.seed);
  fmt::print(out, "# u v aug | footprint | features | score | outlier | weight\n");
  for (EdgeIndex e = 0; e < result.weighted.num_edges(); ++e) {
    const Edge& edge = result.weighted.edge(e);
    const std::string score = std::isnan(result.scores[e])
                                  ? std::string("-")
                                  : fmt::format("{:.6f}", result.scores[e]);
    fmt::print(out, "{} {} {} | {} | {} | {} | {} | {:.9g}\n", edge.u, edge.v,
               edge.augmenting ? 1 : 0,
               fmt::join(result.footprints[e].lengths, " "),
               fmt::join(result.features[e], " "), score,
               result.outlier[e] ? 1 : 0, edge.weight);
  }
}

}  // namespace declutter
