#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace declutter {

using FeatureRow = std::vector<double>;

// Expected path length of an unsuccessful search in a binary search tree
// over q points: c(q) = 2 H(q-1) - 2 (q-1) / q, with c(0) = c(1) = 0.
double AveragePathLength(int q);

struct IsolationForestParams {
  int num_trees = 100;
  int subsample_size = 256;  // clamped to the sample count at fit time
  double threshold = 0.5;
};

class IsolationTree {
 public:
  struct Node {
    int dimension = -1;  // -1 for leaves
    double split = 0.0;
    int left = -1;
    int right = -1;
    int size = 0;  // points reaching the node during training
  };

  IsolationTree() = default;
  explicit IsolationTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

  // Depth of the leaf reached by x plus c(size) of that leaf.
  double PathLength(std::span<const double> x) const;
  int Depth() const;
  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  std::vector<Node> nodes_;
};

class IsolationForest {
 public:
  // Throws TooFewPoints for fewer than two rows and DimensionMismatch for
  // ragged input. Rows are put in lexicographic order before subsampling,
  // so the model does not depend on the order of `points`.
  static IsolationForest Fit(std::span<const FeatureRow> points,
                             const IsolationForestParams& params,
                             std::uint64_t seed);

  // 2^(-E[h(x)] / c(psi)), in (0, 1). Throws DimensionMismatch.
  double Score(std::span<const double> x) const;
  double MeanPathLength(std::span<const double> x) const;
  std::vector<double> Scores(std::span<const FeatureRow> points) const;

  // Flags rows whose score exceeds the threshold.
  std::vector<bool> FlagOutliers(std::span<const FeatureRow> points) const;

  int dimension() const { return dimension_; }
  int subsample_size() const { return subsample_size_; }
  int height_limit() const { return height_limit_; }
  double normalizer() const { return normalizer_; }
  double threshold() const { return threshold_; }
  const std::vector<IsolationTree>& trees() const { return trees_; }

 private:
  int dimension_ = 0;
  int subsample_size_ = 0;
  int height_limit_ = 0;
  double normalizer_ = 1.0;
  double threshold_ = 0.5;
  std::vector<IsolationTree> trees_;
};

}  // namespace declutter
