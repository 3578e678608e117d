// Writes a sample of sparse, connected, non-planar graphs in the graph text
// format, sized like the Rome benchmark (18-100 nodes, 25-141 edges).
//
//   make_rome_sample <out_dir> [count] [seed]

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <fmt/format.h>

#include "declutter/graph.h"
#include "declutter/random.h"

namespace {

using declutter::Graph;
using declutter::Rng;

bool IsPlanar(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS,
                                           boost::undirectedS>;
  BoostGraph bg(g.num_nodes());
  for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// Random spanning tree plus random extra edges, preferring short hops so the
// graph stays sparse and "almost" planar.
Graph RandomSparseGraph(Rng& rng, int n, int m) {
  Graph g(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    const int parent = order[declutter::UniformInt(rng, std::max(0, i - 4), i - 1)];
    g.AddEdge(order[i], parent);
  }
  while (g.num_edges() < m) {
    const int u = declutter::UniformInt(rng, 0, n - 1);
    const int v = declutter::UniformInt(rng, 0, n - 1);
    if (u == v || g.HasEdge(u, v)) continue;
    g.AddEdge(u, v);
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: make_rome_sample <out_dir> [count] [seed]\n";
    return 2;
  }
  const std::filesystem::path out = argv[1];
  const int count = argc > 2 ? std::atoi(argv[2]) : 100;
  const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1;
  std::filesystem::create_directories(out);

  int written = 0;
  for (std::uint64_t attempt = 0; written < count; ++attempt) {
    Rng rng(declutter::DeriveSeed(seed, {attempt}));
    const int n = declutter::UniformInt(rng, 18, 100);
    const double ratio = 1.2 + 0.25 * declutter::Uniform01(rng);
    const int m = std::clamp(static_cast<int>(ratio * n), 25, 141);
    if (m < n) continue;
    Graph g = RandomSparseGraph(rng, n, m);
    if (IsPlanar(g)) continue;
    const auto path = out / fmt::format("grafo{:03d}.{}.graph", written, n);
    declutter::SaveGraphFile(path, g);
    ++written;
  }
  std::cout << fmt::format("wrote {} graphs to {}\n", written, out.string());
  return 0;
}
