#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace declutter {

using NodeId = int;
using EdgeIndex = int;

// Undirected edge stored canonically with u < v. `weight` is the desired
// relative length of the edge; `augmenting` marks edges added on top of a
// planar base graph.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;
  bool augmenting = false;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  NodeId neighbor;
  EdgeIndex edge;
};

// Undirected simple graph over dense node ids 0..n-1.
//
// Adjacency lists are kept sorted by neighbor id so every traversal that
// walks them is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_nodes);

  int num_nodes() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Throws SelfLoop, NodeOutOfRange or DuplicateEdge.
  EdgeIndex AddEdge(NodeId u, NodeId v, double weight = 1.0,
                    bool augmenting = false);

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  std::span<const Incidence> incident(NodeId u) const { return adjacency_[u]; }
  std::vector<NodeId> neighbors(NodeId u) const;
  int degree(NodeId u) const { return static_cast<int>(adjacency_[u].size()); }
  int max_degree() const;

  std::optional<EdgeIndex> FindEdge(NodeId u, NodeId v) const;
  bool HasEdge(NodeId u, NodeId v) const { return FindEdge(u, v).has_value(); }

  void set_weight(EdgeIndex e, double weight);
  void set_augmenting(EdgeIndex e, bool augmenting) {
    edges_[e].augmenting = augmenting;
  }

  int num_augmenting() const;

  // Copy of the graph without edge {u,v}; throws EdgeNotFound.
  Graph WithoutEdge(NodeId u, NodeId v) const;

  // Same graph with every weight reset to 1 (augmenting flags kept).
  Graph Unweighted() const;

  // Graph restricted to the non-augmenting edges.
  Graph BaseGraph() const;

  bool IsConnected() const;

  // Rebuilds adjacency from the edge list and compares with the stored one.
  bool AdjacencyConsistent() const;

  // Equality under canonical edge ordering.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

enum class DistanceMode { kHops, kWeighted };

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

// Dense symmetric all-pairs distance matrix. Disconnected pairs hold
// kUnreachable.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, DistanceMode mode)
      : n_(n), mode_(mode), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int size() const { return n_; }
  DistanceMode mode() const { return mode_; }
  double operator()(int i, int j) const {
    return d_[static_cast<std::size_t>(i) * n_ + j];
  }
  double& operator()(int i, int j) {
    return d_[static_cast<std::size_t>(i) * n_ + j];
  }

 private:
  int n_;
  DistanceMode mode_;
  std::vector<double> d_;
};

// BFS per source for hops, Dijkstra per source for weights.
DistanceMatrix ShortestPathLengths(const Graph& g, DistanceMode mode);

// Text format: header `n m`, then m lines `u v w aug`; '#' lines are comments.
Graph ReadGraph(std::istream& in);
void WriteGraph(std::ostream& out, const Graph& g);
Graph LoadGraphFile(const std::filesystem::path& path);
void SaveGraphFile(const std::filesystem::path& path, const Graph& g);

}  // namespace declutter
