#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here is deliberately naive and shares no code with core/.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <vector>

#include "declutter/geometry.h"
#include "declutter/graph.h"

namespace declutter::oracle {

// Random connected simple graph: a random tree plus `extra` random edges.
inline Graph RandomConnectedGraph(std::mt19937_64& rng, int n, int extra,
                                  bool random_weights = false) {
  Graph g(n);
  std::uniform_real_distribution<double> weight(0.5, 4.0);
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    g.AddEdge(u, v, random_weights ? weight(rng) : 1.0);
  }
  const int max_edges = n * (n - 1) / 2;
  for (int tries = 0; tries < 50 * (extra + 1) && extra > 0 &&
                      g.num_edges() < max_edges;
       ++tries) {
    const int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (u == v || g.HasEdge(u, v)) continue;
    g.AddEdge(u, v, random_weights ? weight(rng) : 1.0);
    --extra;
  }
  return g;
}

// Adjacency matrix with weights; 0 = no edge.
inline std::vector<std::vector<double>> WeightMatrix(const Graph& g) {
  std::vector<std::vector<double>> w(g.num_nodes(),
                                     std::vector<double>(g.num_nodes(), 0.0));
  for (const Edge& e : g.edges()) w[e.u][e.v] = w[e.v][e.u] = e.weight;
  return w;
}

// Shortest s-t distance by enumerating every simple path.
inline double SimplePathDistance(const Graph& g, int s, int t, bool weighted) {
  const auto w = WeightMatrix(g);
  const int n = g.num_nodes();
  double best = std::numeric_limits<double>::infinity();
  std::vector<bool> seen(n, false);
  std::function<void(int, double)> dfs = [&](int u, double len) {
    if (u == t) {
      best = std::min(best, len);
      return;
    }
    seen[u] = true;
    for (int v = 0; v < n; ++v) {
      if (w[u][v] > 0.0 && !seen[v]) dfs(v, len + (weighted ? w[u][v] : 1.0));
    }
    seen[u] = false;
  };
  dfs(s, 0.0);
  return best;
}

// Bitmasks of the internal vertices of every simple u-v path in g without
// the edge {u,v}.
inline std::vector<std::uint32_t> InternalVertexSets(const Graph& g, int u, int v) {
  const auto w = WeightMatrix(g);
  const int n = g.num_nodes();
  std::vector<std::uint32_t> sets;
  std::vector<bool> seen(n, false);
  std::function<void(int, std::uint32_t)> dfs = [&](int x, std::uint32_t mask) {
    for (int y = 0; y < n; ++y) {
      if (w[x][y] == 0.0 || seen[y]) continue;
      if (x == u && y == v) continue;  // the removed edge
      if (y == v) {
        sets.push_back(mask);
        continue;
      }
      seen[y] = true;
      dfs(y, mask | (1u << y));
      seen[y] = false;
    }
  };
  seen[u] = true;
  dfs(u, 0);
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

// Maximum number of internally vertex-disjoint u-v paths in g minus {u,v},
// by exhaustive packing of internal vertex sets.
inline int MaxDisjointPaths(const Graph& g, int u, int v) {
  const auto sets = InternalVertexSets(g, u, v);
  std::map<std::uint32_t, int> memo;
  std::function<int(std::uint32_t)> best = [&](std::uint32_t avail) -> int {
    auto it = memo.find(avail);
    if (it != memo.end()) return it->second;
    int result = 0;
    // Packing restricted to paths inside `avail`; branch on the lowest vertex.
    if (avail != 0) {
      const std::uint32_t low = avail & (~avail + 1);
      result = best(avail & ~low);
      for (std::uint32_t s : sets) {
        if ((s & low) && (s & ~avail) == 0) {
          result = std::max(result, 1 + best(avail & ~s));
        }
      }
    }
    memo[avail] = result;
    return result;
  };
  std::uint32_t all = 0;
  for (int x = 0; x < g.num_nodes(); ++x) {
    if (x != u && x != v) all |= 1u << x;
  }
  // Paths with no internal vertex are impossible once {u,v} is removed.
  return best(all);
}

// Size of a minimum set of non-terminal vertices whose removal disconnects u
// from v in g minus {u,v}; by brute force over subsets in order of size.
inline int MinVertexCut(const Graph& g, int u, int v) {
  const int n = g.num_nodes();
  const auto w = WeightMatrix(g);
  auto connected = [&](std::uint32_t removed) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{u};
    seen[u] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (x == v) return true;
      for (int y = 0; y < n; ++y) {
        if (w[x][y] == 0.0 || seen[y] || (removed >> y & 1u)) continue;
        if ((x == u && y == v) || (x == v && y == u)) continue;
        seen[y] = true;
        stack.push_back(y);
      }
    }
    return false;
  };
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if ((mask >> u & 1u) || (mask >> v & 1u)) continue;
    const int size = std::popcount(mask);
    if (size < best && !connected(mask)) best = size;
  }
  return best;
}

// Independent segment crossing test: proper crossings only, via signs of
// orientation determinants computed from scratch.
inline int Sign(double x) { return (x > 1e-12) - (x < -1e-12); }

inline bool SegmentsCross(Point a, Point b, Point c, Point d) {
  auto orient = [](Point p, Point q, Point r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  };
  const int d1 = Sign(orient(c, d, a));
  const int d2 = Sign(orient(c, d, b));
  const int d3 = Sign(orient(a, b, c));
  const int d4 = Sign(orient(a, b, d));
  return d1 * d2 < 0 && d3 * d4 < 0;
}

inline int CountCrossingsNaive(const Graph& g, const std::vector<Point>& p) {
  int count = 0;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      if (SegmentsCross(p[e.u], p[e.v], p[f.u], p[f.v])) ++count;
    }
  }
  return count;
}

}  // namespace declutter::oracle
