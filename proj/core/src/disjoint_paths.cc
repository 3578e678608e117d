#include "declutter/disjoint_paths.h"

#include <algorithm>
#include <limits>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "declutter/error.h"
#include "declutter/parallel.h"

namespace declutter {

FlowNetwork::FlowNetwork(int num_original_nodes, NodeId origin, NodeId target)
    : origin_(origin), target_(target), out_(2 * num_original_nodes) {}

void FlowNetwork::AddArc(int tail, int head, int capacity) {
  out_[tail].push_back(num_arcs());
  tails_.push_back(tail);
  arcs_.push_back({head, capacity});
}

void FlowNetwork::Finalize() {
  for (auto& list : out_) {
    std::sort(list.begin(), list.end(), [this](int a, int b) {
      return arcs_[a].head < arcs_[b].head;
    });
  }
}

FlowNetwork BuildSplitNetwork(const Graph& g, NodeId u, NodeId v) {
  const auto removed = g.FindEdge(u, v);
  if (!removed) {
    throw Error(ErrorCode::kEdgeNotFound, fmt::format("{{{},{}}}", u, v));
  }
  FlowNetwork net(g.num_nodes(), u, v);
  for (NodeId x = 0; x < g.num_nodes(); ++x) {
    const bool terminal = x == u || x == v;
    net.AddArc(FlowNetwork::In(x), FlowNetwork::Out(x),
               terminal ? std::max(1, g.degree(x)) : 1);
  }
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    if (e == *removed) continue;
    const Edge& edge = g.edge(e);
    net.AddArc(FlowNetwork::Out(edge.u), FlowNetwork::In(edge.v), 1);
    net.AddArc(FlowNetwork::Out(edge.v), FlowNetwork::In(edge.u), 1);
  }
  net.Finalize();
  return net;
}

namespace {

// Residual graph over the network's arcs; arc 2i is the forward copy of
// network arc i and 2i+1 its reverse.
class Residual {
 public:
  explicit Residual(const FlowNetwork& net)
      : net_(net), capacity_(2 * net.num_arcs(), 0), adj_(net.num_vertices()) {
    for (int a = 0; a < net.num_arcs(); ++a) {
      capacity_[2 * a] = net.arc(a).capacity;
      adj_[net.tail(a)].push_back(2 * a);
      adj_[net.arc(a).head].push_back(2 * a + 1);
    }
    for (auto& list : adj_) {
      std::sort(list.begin(), list.end(),
                [this](int a, int b) { return Head(a) < Head(b); });
    }
  }

  int Head(int r) const {
    return (r % 2 == 0) ? net_.arc(r / 2).head : net_.tail(r / 2);
  }

  // One BFS augmentation; returns false when the sink is unreachable.
  bool Augment(int source, int sink) {
    std::vector<int> via(net_.num_vertices(), -1);
    std::vector<bool> seen(net_.num_vertices(), false);
    std::vector<int> queue = {source};
    seen[source] = true;
    for (std::size_t head = 0; head < queue.size() && !seen[sink]; ++head) {
      const int x = queue[head];
      for (int r : adj_[x]) {
        const int y = Head(r);
        if (capacity_[r] > 0 && !seen[y]) {
          seen[y] = true;
          via[y] = r;
          queue.push_back(y);
        }
      }
    }
    if (!seen[sink]) return false;
    int bottleneck = std::numeric_limits<int>::max();
    for (int y = sink; y != source; y = Head(via[y] ^ 1)) {
      bottleneck = std::min(bottleneck, capacity_[via[y]]);
    }
    for (int y = sink; y != source; y = Head(via[y] ^ 1)) {
      capacity_[via[y]] -= bottleneck;
      capacity_[via[y] ^ 1] += bottleneck;
    }
    return true;
  }

  // Net flow on network arc a.
  int Flow(int a) const { return capacity_[2 * a + 1]; }

 private:
  const FlowNetwork& net_;
  std::vector<int> capacity_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

std::vector<NodePath> MaxFlowPaths(const FlowNetwork& net) {
  Residual residual(net);
  int value = 0;
  while (residual.Augment(net.source(), net.sink())) ++value;

  std::vector<int> flow(net.num_arcs());
  for (int a = 0; a < net.num_arcs(); ++a) flow[a] = residual.Flow(a);

  std::vector<NodePath> paths;
  for (int k = 0; k < value; ++k) {
    std::vector<int> via(net.num_vertices(), -1);
    std::vector<bool> seen(net.num_vertices(), false);
    std::vector<int> queue = {net.source()};
    seen[net.source()] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (int a : net.out_arcs(x)) {
        const int y = net.arc(a).head;
        if (flow[a] > 0 && !seen[y]) {
          seen[y] = true;
          via[y] = a;
          queue.push_back(y);
        }
      }
    }
    if (!seen[net.sink()]) break;  // unreachable for a valid flow

    std::vector<int> vertices = {net.sink()};
    for (int y = net.sink(); y != net.source(); y = net.tail(via[y])) {
      --flow[via[y]];
      vertices.push_back(net.tail(via[y]));
    }
    std::reverse(vertices.begin(), vertices.end());
    NodePath path;
    for (int x : vertices) {
      const NodeId original = FlowNetwork::Original(x);
      if (path.empty() || path.back() != original) path.push_back(original);
    }
    paths.push_back(std::move(path));
  }
  std::stable_sort(paths.begin(), paths.end(),
                   [](const NodePath& a, const NodePath& b) {
                     return a.size() < b.size();
                   });
  return paths;
}

Footprint ComputeFootprint(const Graph& g, NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  const std::vector<NodePath> paths = MaxFlowPaths(BuildSplitNetwork(g, u, v));
  Footprint f{u, v, {}};
  f.lengths.reserve(paths.size());
  for (const NodePath& p : paths) {
    f.lengths.push_back(static_cast<int>(p.size()) - 1);
  }
  std::sort(f.lengths.begin(), f.lengths.end());
  return f;
}

std::vector<Footprint> AllFootprints(const Graph& g, int jobs) {
  std::vector<Footprint> out(g.num_edges());
  ParallelFor(g.num_edges(), jobs, [&](int e) {
    out[e] = ComputeFootprint(g, g.edge(e).u, g.edge(e).v);
  });
  return out;
}

std::string FormatFootprint(const Footprint& f) {
  if (f.lengths.empty()) return fmt::format("{} {} :", f.u, f.v);
  return fmt::format("{} {} : {}", f.u, f.v, fmt::join(f.lengths, " "));
}

void WriteFootprints(std::ostream& out, const std::vector<Footprint>& all) {
  for (const Footprint& f : all) out << FormatFootprint(f) << '\n';
}

}  // namespace declutter
