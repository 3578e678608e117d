#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "declutter/graph.h"

namespace declutter {

// Unit-capacity flow network over G \ {origin,target} with every node u
// split into u_in = 2u and u_out = 2u + 1 joined by an internal arc.
// Each remaining undirected edge {a,b} contributes (a_out,b_in) and
// (b_out,a_in). The terminals' internal arcs carry capacity deg so that
// endpoints may be shared by all paths.
class FlowNetwork {
 public:
  struct Arc {
    int head;
    int capacity;
  };

  static int In(NodeId u) { return 2 * u; }
  static int Out(NodeId u) { return 2 * u + 1; }
  static NodeId Original(int vertex) { return vertex / 2; }

  FlowNetwork(int num_original_nodes, NodeId origin, NodeId target);

  void AddArc(int tail, int head, int capacity);
  // Sorts every out-list by head so traversals visit neighbors by id.
  void Finalize();

  int num_vertices() const { return static_cast<int>(out_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int index) const { return arcs_[index]; }
  int tail(int index) const { return tails_[index]; }
  const std::vector<int>& out_arcs(int vertex) const { return out_[vertex]; }

  NodeId origin() const { return origin_; }
  NodeId target() const { return target_; }
  int source() const { return Out(origin_); }
  int sink() const { return In(target_); }

 private:
  NodeId origin_;
  NodeId target_;
  std::vector<Arc> arcs_;
  std::vector<int> tails_;
  std::vector<std::vector<int>> out_;
};

// Throws EdgeNotFound when {u,v} is not an edge of g.
FlowNetwork BuildSplitNetwork(const Graph& g, NodeId u, NodeId v);

// A source-to-sink path as the sequence of original nodes it visits,
// endpoints included; its length in original edges is size() - 1.
using NodePath = std::vector<NodeId>;

// Edmonds-Karp (BFS shortest augmenting paths) followed by a decomposition
// that repeatedly peels the shortest source-to-sink path off the flow
// support. Returned paths are internally vertex-disjoint.
std::vector<NodePath> MaxFlowPaths(const FlowNetwork& net);

struct Footprint {
  NodeId u = 0;
  NodeId v = 0;
  std::vector<int> lengths;  // non-decreasing; empty for a bridge

  bool empty() const { return lengths.empty(); }
  friend bool operator==(const Footprint&, const Footprint&) = default;
};

Footprint ComputeFootprint(const Graph& g, NodeId u, NodeId v);

// One footprint per edge, indexed by EdgeIndex. `jobs` > 1 evaluates edges
// on a worker pool; the result does not depend on scheduling.
std::vector<Footprint> AllFootprints(const Graph& g, int jobs = 1);

// `u v : l1 l2 ... lk`
std::string FormatFootprint(const Footprint& f);
void WriteFootprints(std::ostream& out, const std::vector<Footprint>& all);

}  // namespace declutter
