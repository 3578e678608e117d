#include "declutter/graph.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "declutter/error.h"

namespace declutter {

Graph::Graph(int num_nodes) {
  if (num_nodes < 0) {
    throw Error(ErrorCode::kInvalidSize, "negative node count");
  }
  adjacency_.resize(num_nodes);
}

EdgeIndex Graph::AddEdge(NodeId u, NodeId v, double weight, bool augmenting) {
  if (u == v) {
    throw Error(ErrorCode::kSelfLoop, fmt::format("node {}", u));
  }
  if (u < 0 || v < 0 || u >= num_nodes() || v >= num_nodes()) {
    throw Error(ErrorCode::kNodeOutOfRange,
                fmt::format("edge {{{},{}}} with n={}", u, v, num_nodes()));
  }
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw Error(ErrorCode::kInvariantViolation,
                fmt::format("edge weight {} must be positive", weight));
  }
  if (u > v) std::swap(u, v);
  if (HasEdge(u, v)) {
    throw Error(ErrorCode::kDuplicateEdge, fmt::format("{{{},{}}}", u, v));
  }
  const EdgeIndex index = num_edges();
  edges_.push_back({u, v, weight, augmenting});
  auto insert_sorted = [](std::vector<Incidence>& list, Incidence inc) {
    auto it = std::lower_bound(
        list.begin(), list.end(), inc.neighbor,
        [](const Incidence& a, NodeId id) { return a.neighbor < id; });
    list.insert(it, inc);
  };
  insert_sorted(adjacency_[u], {v, index});
  insert_sorted(adjacency_[v], {u, index});
  return index;
}

std::vector<NodeId> Graph::neighbors(NodeId u) const {
  std::vector<NodeId> out;
  out.reserve(adjacency_[u].size());
  for (const Incidence& inc : adjacency_[u]) out.push_back(inc.neighbor);
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) {
    best = std::max(best, static_cast<int>(list.size()));
  }
  return best;
}

std::optional<EdgeIndex> Graph::FindEdge(NodeId u, NodeId v) const {
  if (u < 0 || v < 0 || u >= num_nodes() || v >= num_nodes()) {
    return std::nullopt;
  }
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(
      list.begin(), list.end(), v,
      [](const Incidence& a, NodeId id) { return a.neighbor < id; });
  if (it != list.end() && it->neighbor == v) return it->edge;
  return std::nullopt;
}

void Graph::set_weight(EdgeIndex e, double weight) {
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw Error(ErrorCode::kInvariantViolation,
                fmt::format("edge weight {} must be positive", weight));
  }
  edges_[e].weight = weight;
}

int Graph::num_augmenting() const {
  return static_cast<int>(std::count_if(
      edges_.begin(), edges_.end(), [](const Edge& e) { return e.augmenting; }));
}

Graph Graph::WithoutEdge(NodeId u, NodeId v) const {
  const auto removed = FindEdge(u, v);
  if (!removed) {
    throw Error(ErrorCode::kEdgeNotFound, fmt::format("{{{},{}}}", u, v));
  }
  Graph out(num_nodes());
  for (EdgeIndex e = 0; e < num_edges(); ++e) {
    if (e == *removed) continue;
    out.AddEdge(edges_[e].u, edges_[e].v, edges_[e].weight,
                edges_[e].augmenting);
  }
  return out;
}

Graph Graph::Unweighted() const {
  Graph out = *this;
  for (Edge& e : out.edges_) e.weight = 1.0;
  return out;
}

Graph Graph::BaseGraph() const {
  Graph out(num_nodes());
  for (const Edge& e : edges_) {
    if (!e.augmenting) out.AddEdge(e.u, e.v, e.weight, false);
  }
  return out;
}

bool Graph::IsConnected() const {
  if (num_nodes() <= 1) return true;
  std::vector<bool> seen(num_nodes(), false);
  std::vector<NodeId> stack = {0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (const Incidence& inc : adjacency_[u]) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        ++count;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return count == num_nodes();
}

bool Graph::AdjacencyConsistent() const {
  std::vector<std::vector<Incidence>> rebuilt(num_nodes());
  for (EdgeIndex e = 0; e < num_edges(); ++e) {
    rebuilt[edges_[e].u].push_back({edges_[e].v, e});
    rebuilt[edges_[e].v].push_back({edges_[e].u, e});
  }
  for (NodeId u = 0; u < num_nodes(); ++u) {
    auto& list = rebuilt[u];
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) {
                return a.neighbor < b.neighbor;
              });
    if (list.size() != adjacency_[u].size()) return false;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].neighbor != adjacency_[u][i].neighbor ||
          list[i].edge != adjacency_[u][i].edge) {
        return false;
      }
    }
  }
  return true;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges()) {
    return false;
  }
  auto canonical = [](const Graph& g) {
    std::vector<Edge> edges(g.edges_.begin(), g.edges_.end());
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
      return std::pair(x.u, x.v) < std::pair(y.u, y.v);
    });
    return edges;
  };
  return canonical(a) == canonical(b);
}

namespace {

void FillHops(const Graph& g, NodeId source, DistanceMatrix& d) {
  std::vector<NodeId> queue = {source};
  d(source, source) = 0.0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (const Incidence& inc : g.incident(u)) {
      if (d(source, inc.neighbor) == kUnreachable) {
        d(source, inc.neighbor) = d(source, u) + 1.0;
        queue.push_back(inc.neighbor);
      }
    }
  }
}

void FillWeighted(const Graph& g, NodeId source, DistanceMatrix& d) {
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  d(source, source) = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [dist, u] = heap.top();
    heap.pop();
    if (dist > d(source, u)) continue;
    for (const Incidence& inc : g.incident(u)) {
      const double candidate = dist + g.edge(inc.edge).weight;
      if (candidate < d(source, inc.neighbor)) {
        d(source, inc.neighbor) = candidate;
        heap.emplace(candidate, inc.neighbor);
      }
    }
  }
}

}  // namespace

DistanceMatrix ShortestPathLengths(const Graph& g, DistanceMode mode) {
  DistanceMatrix d(g.num_nodes(), mode);
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    if (mode == DistanceMode::kHops) {
      FillHops(g, s, d);
    } else {
      FillWeighted(g, s, d);
    }
  }
  // Mirror the upper triangle so the matrix is exactly symmetric.
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    for (NodeId j = i + 1; j < g.num_nodes(); ++j) d(j, i) = d(i, j);
  }
  return d;
}

namespace {

struct RawEdge {
  long long u, v;
  double w;
  bool aug;
  int line;
};

[[noreturn]] void ParseFail(int line, const std::string& what) {
  throw Error(ErrorCode::kParseError, fmt::format("line {}: {}", line, what));
}

}  // namespace

Graph ReadGraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<RawEdge> raw;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!have_header) {
      if (!(fields >> n >> m) || n < 0 || m < 0) {
        ParseFail(line_no, "expected header 'n m'");
      }
      have_header = true;
      continue;
    }
    RawEdge e{0, 0, 1.0, false, line_no};
    int aug = 0;
    if (!(fields >> e.u >> e.v)) ParseFail(line_no, "expected 'u v w aug'");
    if (fields >> e.w) {
      if (fields >> aug) {
        if (aug != 0 && aug != 1) ParseFail(line_no, "aug flag must be 0 or 1");
      } else if (!fields.eof()) {
        ParseFail(line_no, "malformed aug flag");
      }
    } else if (!fields.eof()) {
      ParseFail(line_no, "malformed weight");
    }
    std::string trailing;
    if (fields.clear(), fields >> trailing) {
      ParseFail(line_no, "unexpected trailing token '" + trailing + "'");
    }
    e.aug = aug == 1;
    raw.push_back(e);
  }
  if (!have_header) ParseFail(line_no, "missing header");
  if (static_cast<long long>(raw.size()) != m) {
    ParseFail(line_no, fmt::format("header declares {} edges, found {}", m,
                                   raw.size()));
  }

  // Labels already dense keep their ids; anything else is remapped by rank.
  bool dense = true;
  std::map<long long, NodeId> labels;
  for (const RawEdge& e : raw) {
    labels.emplace(e.u, 0);
    labels.emplace(e.v, 0);
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) dense = false;
  }
  if (static_cast<long long>(labels.size()) > n) {
    ParseFail(line_no, fmt::format("{} distinct labels exceed n={}",
                                   labels.size(), n));
  }
  NodeId next = 0;
  for (auto& [label, id] : labels) {
    id = dense ? static_cast<NodeId>(label) : next++;
  }

  Graph g(static_cast<int>(n));
  for (const RawEdge& e : raw) {
    try {
      g.AddEdge(labels.at(e.u), labels.at(e.v), e.w, e.aug);
    } catch (const Error& err) {
      throw Error(ErrorCode::kInvariantViolation,
                  fmt::format("line {}: {}", e.line, err.what()));
    }
  }
  return g;
}

void WriteGraph(std::ostream& out, const Graph& g) {
  fmt::print(out, "{} {}\n", g.num_nodes(), g.num_edges());
  for (const Edge& e : g.edges()) {
    fmt::print(out, "{} {} {:.17g} {}\n", e.u, e.v, e.weight,
               e.augmenting ? 1 : 0);
  }
}

Graph LoadGraphFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  return ReadGraph(in);
}

void SaveGraphFile(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot write " + path.string());
  }
  WriteGraph(out, g);
}

}  // namespace declutter
