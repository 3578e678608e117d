#include "declutter/isolation_forest.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "declutter/error.h"
#include "declutter/random.h"

namespace declutter {

double AveragePathLength(int q) {
  if (q <= 1) return 0.0;
  double harmonic = 0.0;
  for (int i = 1; i <= q - 1; ++i) harmonic += 1.0 / i;
  return 2.0 * harmonic - 2.0 * (q - 1) / static_cast<double>(q);
}

double IsolationTree::PathLength(std::span<const double> x) const {
  int index = 0;
  int depth = 0;
  while (nodes_[index].dimension >= 0) {
    const Node& node = nodes_[index];
    index = x[node.dimension] < node.split ? node.left : node.right;
    ++depth;
  }
  return depth + AveragePathLength(nodes_[index].size);
}

int IsolationTree::Depth() const {
  std::vector<int> depth(nodes_.size(), 0);
  int best = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    best = std::max(best, depth[i]);
    if (nodes_[i].dimension >= 0) {
      depth[nodes_[i].left] = depth[i] + 1;
      depth[nodes_[i].right] = depth[i] + 1;
    }
  }
  return best;
}

namespace {

class TreeBuilder {
 public:
  TreeBuilder(std::span<const FeatureRow> points, int dimension,
              int height_limit, Rng& rng)
      : points_(points),
        dimension_(dimension),
        height_limit_(height_limit),
        rng_(rng) {}

  IsolationTree Build(std::vector<int> sample) {
    Grow(std::move(sample), 0);
    return IsolationTree(std::move(nodes_));
  }

 private:
  int Grow(std::vector<int> sample, int depth) {
    const int index = static_cast<int>(nodes_.size());
    nodes_.push_back({});
    nodes_[index].size = static_cast<int>(sample.size());
    if (depth >= height_limit_ || sample.size() <= 1) return index;

    // Only dimensions with spread admit a split strictly inside (min, max).
    std::vector<int> candidates;
    std::vector<std::pair<double, double>> range(dimension_);
    for (int d = 0; d < dimension_; ++d) {
      auto [lo, hi] = std::minmax_element(
          sample.begin(), sample.end(),
          [&](int a, int b) { return points_[a][d] < points_[b][d]; });
      range[d] = {points_[*lo][d], points_[*hi][d]};
      if (range[d].first < range[d].second) candidates.push_back(d);
    }
    if (candidates.empty()) return index;

    const int dim = candidates[UniformInt(
        rng_, 0, static_cast<int>(candidates.size()) - 1)];
    const auto [lo, hi] = range[dim];
    double split = lo;
    while (!(split > lo && split < hi)) {
      split = std::uniform_real_distribution<double>(lo, hi)(rng_);
    }
    std::vector<int> left;
    std::vector<int> right;
    for (int i : sample) {
      (points_[i][dim] < split ? left : right).push_back(i);
    }
    sample.clear();
    sample.shrink_to_fit();
    const int l = Grow(std::move(left), depth + 1);
    const int r = Grow(std::move(right), depth + 1);
    nodes_[index].dimension = dim;
    nodes_[index].split = split;
    nodes_[index].left = l;
    nodes_[index].right = r;
    return index;
  }

  std::span<const FeatureRow> points_;
  int dimension_;
  int height_limit_;
  Rng& rng_;
  std::vector<IsolationTree::Node> nodes_;
};

}  // namespace

IsolationForest IsolationForest::Fit(std::span<const FeatureRow> points,
                                     const IsolationForestParams& params,
                                     std::uint64_t seed) {
  if (points.size() < 2) {
    throw Error(ErrorCode::kTooFewPoints,
                fmt::format("{} points (need at least 2)", points.size()));
  }
  const int dimension = static_cast<int>(points[0].size());
  for (const FeatureRow& row : points) {
    if (static_cast<int>(row.size()) != dimension) {
      throw Error(ErrorCode::kDimensionMismatch,
                  fmt::format("row of length {} in a {}-dimensional sample",
                              row.size(), dimension));
    }
  }
  if (params.num_trees < 1 || params.subsample_size < 2) {
    throw Error(ErrorCode::kInvalidConfig,
                "isolation forest needs >= 1 tree and subsample >= 2");
  }

  std::vector<FeatureRow> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());

  IsolationForest forest;
  forest.dimension_ = dimension;
  forest.subsample_size_ =
      std::min(params.subsample_size, static_cast<int>(sorted.size()));
  forest.height_limit_ = static_cast<int>(
      std::ceil(std::log2(static_cast<double>(forest.subsample_size_))));
  forest.normalizer_ = AveragePathLength(forest.subsample_size_);
  forest.threshold_ = params.threshold;
  forest.trees_.reserve(params.num_trees);

  std::vector<int> all(sorted.size());
  std::iota(all.begin(), all.end(), 0);
  for (int t = 0; t < params.num_trees; ++t) {
    Rng rng(DeriveSeed(seed, {static_cast<std::uint64_t>(t)}));
    // Partial Fisher-Yates draw of the subsample.
    std::vector<int> pool = all;
    for (int i = 0; i < forest.subsample_size_; ++i) {
      std::swap(pool[i],
                pool[UniformInt(rng, i, static_cast<int>(pool.size()) - 1)]);
    }
    pool.resize(forest.subsample_size_);
    TreeBuilder builder(sorted, dimension, forest.height_limit_, rng);
    forest.trees_.push_back(builder.Build(std::move(pool)));
  }
  return forest;
}

double IsolationForest::MeanPathLength(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dimension_) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("point of length {} for a {}-dimensional model",
                            x.size(), dimension_));
  }
  // Running mean: exact when every tree reports the same length.
  double mean = 0.0;
  double count = 0.0;
  for (const IsolationTree& tree : trees_) {
    count += 1.0;
    mean += (tree.PathLength(x) - mean) / count;
  }
  return mean;
}

double IsolationForest::Score(std::span<const double> x) const {
  return std::exp2(-MeanPathLength(x) / normalizer_);
}

std::vector<double> IsolationForest::Scores(
    std::span<const FeatureRow> points) const {
  std::vector<double> out;
  out.reserve(points.size());
  for (const FeatureRow& row : points) out.push_back(Score(row));
  return out;
}

std::vector<bool> IsolationForest::FlagOutliers(
    std::span<const FeatureRow> points) const {
  std::vector<bool> out;
  out.reserve(points.size());
  for (const FeatureRow& row : points) out.push_back(Score(row) > threshold_);
  return out;
}

}  // namespace declutter
