// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion ids as
// arguments to run a subset, e.g. `acceptance_test 1 2 8`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <unistd.h>
#include <vector>

#include <fmt/format.h>

#include "declutter/clutter_weighting.h"
#include "declutter/disjoint_paths.h"
#include "declutter/engines.h"
#include "declutter/error.h"
#include "declutter/experiment.h"
#include "declutter/generators.h"
#include "declutter/isolation_forest.h"
#include "declutter/metrics.h"
#include "declutter/random.h"
#include "declutter/stats.h"
#include "declutter/suite.h"
#include "oracles.h"

namespace declutter {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no runtime bound
  std::function<Outcome()> run;
};

fs::path ScratchRoot() {
  static const fs::path root =
      fs::temp_directory_path() / fmt::format("declutter_acceptance_{}", ::getpid());
  return root;
}

// The default experiment restricted to FA2, one dataset and the variants a
// criterion needs, run through the regular pipeline stages.
std::vector<Record> RunDataset(const std::string& dataset,
                               std::vector<Aggregate> aggregates,
                               bool neighborhood,
                               std::vector<fs::path> files = {}) {
  ExperimentConfig config = LoadConfig(DECLUTTER_SOURCE_DIR "/configs/default.json");
  std::erase_if(config.datasets,
                [&](const DatasetConfig& d) { return d.name != dataset; });
  if (config.datasets.size() != 1) {
    throw Error(ErrorCode::kInvalidConfig,
                fmt::format("default config has no dataset '{}'", dataset));
  }
  if (!files.empty()) config.datasets[0].files = std::move(files);
  config.engines = {Engine::kFa2};
  config.aggregates = std::move(aggregates);
  config.neighborhood = neighborhood;
  config.output_dir = ScratchRoot() / dataset;
  fs::remove_all(config.output_dir);
  RunGenerate(config, {});
  RunLayout(config, {});
  RunEvaluate(config, {});
  std::ifstream in(OutputPaths{config.output_dir}.Records());
  return ReadRecordsCsv(in);
}

std::map<std::string, int> Crossings(const std::vector<Record>& records,
                                     const std::string& variant) {
  std::map<std::string, int> out;
  for (const Record& r : records) {
    if (r.variant == variant) out[r.graph_id] = r.nc;
  }
  return out;
}

struct Paired {
  int graphs = 0;
  double median_a = 0.0;
  double median_b = 0.0;
  double statistic = 0.0;
  double p = 1.0;
};

Paired PairedCrossings(const std::vector<Record>& records, const std::string& a,
                       const std::string& b) {
  const auto xa = Crossings(records, a);
  const auto xb = Crossings(records, b);
  std::vector<double> va, vb;
  for (const auto& [id, nc] : xa) {
    va.push_back(nc);
    vb.push_back(xb.at(id));
  }
  Paired out;
  out.graphs = static_cast<int>(va.size());
  out.median_a = Median(va);
  out.median_b = Median(vb);
  try {
    const WilcoxonResult w = WilcoxonSignedRank(va, vb);
    out.statistic = w.statistic;
    out.p = w.p;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kAllZeroDifferences) throw;
  }
  return out;
}

std::string Describe(const Paired& t, const std::string& a, const std::string& b) {
  return fmt::format("{} graphs, median nc {} {} vs {} {}, W={}, p={:.3g}", t.graphs, a,
                     t.median_a, b, t.median_b, t.statistic, t.p);
}

Outcome ReducesCrossings(const std::string& dataset, Aggregate aggregate,
                         const std::string& variant, const std::string& baseline) {
  const auto records = RunDataset(dataset, {aggregate}, false);
  const Paired t = PairedCrossings(records, variant, baseline);
  return {t.graphs >= 20 && t.median_a < t.median_b && t.p < kSignificanceLevel,
          Describe(t, variant, baseline)};
}

const std::vector<Record>& GridRecords() {
  static const std::vector<Record> records =
      RunDataset("grids", {Aggregate::kMin}, false);
  return records;
}

// Node id of (row, col) in a 7x7 grid.
NodeId At(int r, int c) { return r * 7 + c; }

Outcome FootprintFidelity() {
  Graph g = GenerateGrid(7, 7);
  g.AddEdge(At(1, 1), At(5, 5), 1.0, true);
  g.AddEdge(At(0, 0), At(2, 6), 1.0, true);
  g.AddEdge(At(4, 2), At(5, 1), 1.0, true);
  const Footprint cd = ComputeFootprint(g, At(4, 2), At(5, 1));
  const Footprint ab = ComputeFootprint(g, At(1, 1), At(5, 5));
  const bool pass = cd.lengths == std::vector<int>{2, 2, 6, 6} &&
                    ab.lengths == std::vector<int>{7, 8, 8, 12};
  return {pass, fmt::format("f(c,d) = {}, f(a,b) = {}", FormatFootprint(cd),
                            FormatFootprint(ab))};
}

Outcome MaxFlowOracle() {
  std::mt19937_64 rng(2718);
  int mismatches = 0;
  int edges = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 7;
    const int extra = static_cast<int>(rng() % (n * (n - 1) / 2 - (n - 1) + 1));
    const Graph g = oracle::RandomConnectedGraph(rng, n, extra);
    for (const Edge& e : g.edges()) {
      ++edges;
      const int got = static_cast<int>(ComputeFootprint(g, e.u, e.v).lengths.size());
      mismatches += got != oracle::MaxDisjointPaths(g, e.u, e.v);
    }
  }
  return {mismatches == 0,
          fmt::format("200 graphs, {} edges, {} mismatches", edges, mismatches)};
}

Outcome PlanarGridSanity() {
  std::vector<double> orig;
  for (const auto& [id, nc] : Crossings(GridRecords(), "orig")) orig.push_back(nc);
  const double median = Median(orig);
  const auto zero = std::count(orig.begin(), orig.end(), 0.0);
  return {orig.size() >= 20 && median == 0.0,
          fmt::format("{} plain grids, median nc {}, {} drawn without crossings",
                      orig.size(), median, zero)};
}

Outcome FixedWeightReplication() {
  const ExperimentConfig config =
      LoadConfig(DECLUTTER_SOURCE_DIR "/configs/default.json");
  const OutputPaths paths{ScratchRoot() / "grids"};
  const auto redraw = Crossings(GridRecords(), "redraw");
  const std::vector<Variant> only = {Variant::kFixed};
  SuiteParams params;
  params.engine = config.engine;
  int fewer = 0;
  int total = 0;
  for (const ManifestEntry& m : ReadManifest(paths.Manifest("grids"))) {
    const Graph planar = LoadGraphFile(paths.GraphFile("grids", m.graph_id, false));
    const Graph aug = LoadGraphFile(paths.GraphFile("grids", m.graph_id, true));
    params.restart_seeds.clear();
    for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(config.restarts); ++r) {
      params.restart_seeds.push_back(
          DeriveSeed(config.layout_seed, {static_cast<std::uint64_t>(total), r, 7}));
    }
    const SuiteResult result = LayoutSuite(planar, aug, Engine::kFa2, params, only);
    fewer += result.crossings.at(Variant::kFixed) < redraw.at(m.graph_id);
    ++total;
  }
  return {total >= 20 && fewer >= 15,
          fmt::format("fixed 0.01 beats redraw on {} of {} grids", fewer, total)};
}

// Two-sided exact p by enumerating all sign assignments of the ranks.
double EnumeratedP(const std::vector<double>& d) {
  std::vector<double> ranks;
  double w_plus = 0.0;
  for (double a : d) {
    int smaller = 0, equal = 0;
    for (double b : d) {
      smaller += std::abs(b) < std::abs(a);
      equal += std::abs(b) == std::abs(a);
    }
    ranks.push_back(1.0 + smaller + (equal - 1) / 2.0);
    if (a > 0) w_plus += ranks.back();
  }
  const int n = static_cast<int>(d.size());
  const double w = std::min(w_plus, n * (n + 1) / 2.0 - w_plus);
  long long hits = 0;
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    double t = 0.0;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) t += ranks[i];
    }
    hits += t <= w + 1e-9;
  }
  return std::min(1.0, 2.0 * hits / std::ldexp(1.0, n));
}

Outcome PropertySuite() {
  std::vector<std::string> failed;
  std::mt19937_64 rng(31415);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto random_points = [&](int n) {
    std::vector<Point> p(n);
    for (Point& q : p) q = {unit(rng), unit(rng)};
    return p;
  };

  // Stress never increases.
  bool monotone = true;
  for (int run = 0; run < 20; ++run) {
    const Graph g = oracle::RandomConnectedGraph(rng, 10 + run, 2 * run, run % 2 == 1);
    std::vector<double> trace;
    StressMajorization(g, RandomLayout(g.num_nodes(), run), SmParams{}, &trace);
    for (std::size_t i = 1; i < trace.size(); ++i) {
      monotone &= trace[i] <= trace[i - 1] * (1.0 + 1e-12) + 1e-15;
    }
  }
  if (!monotone) failed.push_back("stress monotonicity");

  // Procrustes against similar copies.
  double worst_ps = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_points(5 + trial);
    const double angle = 2.0 * std::acos(-1.0) * unit(rng);
    const double scale = 0.1 + 10.0 * unit(rng);
    const Point shift{unit(rng) * 100.0, -unit(rng) * 100.0};
    std::vector<Point> y;
    for (Point q : x) {
      if (trial % 2 == 1) q.y = -q.y;
      y.push_back(scale * Point{q.x * std::cos(angle) - q.y * std::sin(angle),
                                q.x * std::sin(angle) + q.y * std::cos(angle)} +
                  shift);
    }
    worst_ps = std::max(worst_ps, ProcrustesStatistic(x, y));
  }
  if (!(worst_ps < 1e-9)) failed.push_back(fmt::format("procrustes {:.3g}", worst_ps));

  // Crossing counter against the orientation oracle.
  int crossing_mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::RandomConnectedGraph(rng, 6 + trial % 20, trial % 25);
    const auto p = random_points(g.num_nodes());
    crossing_mismatches += CountCrossings(g, p) != oracle::CountCrossingsNaive(g, p);
  }
  if (crossing_mismatches) {
    failed.push_back(fmt::format("crossings {} mismatches", crossing_mismatches));
  }

  // Exact Wilcoxon against enumeration.
  int wilcoxon_mismatches = 0;
  for (int n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> xs(n), ys(n, 0.0);
      for (double& x : xs) {
        x = std::round(unit(rng) * 12.0 - 4.0);
        if (x == 0.0) x = 1.0;
      }
      const WilcoxonResult w = WilcoxonSignedRank(xs, ys, WilcoxonMethod::kExact);
      wilcoxon_mismatches += std::abs(w.p - EnumeratedP(xs)) > 1e-12;
    }
  }
  if (wilcoxon_mismatches) {
    failed.push_back(fmt::format("wilcoxon {} mismatches", wilcoxon_mismatches));
  }

  // Planted outlier.
  std::vector<FeatureRow> rows(100, FeatureRow{0.0, 0.0});
  rows.push_back({10.0, 0.0});
  int flagged = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto flags = IsolationForest::Fit(rows, {}, seed).FlagOutliers(rows);
    flagged += flags[100] && std::count(flags.begin(), flags.end(), true) == 1;
  }
  if (flagged < 95) failed.push_back(fmt::format("outlier flagged {}/100", flagged));

  // Footprint normalization identity for l = k.
  int identity_mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Footprint f;
    const int k = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < k; ++i) f.lengths.push_back(2 + static_cast<int>(rng() % 20));
    std::sort(f.lengths.begin(), f.lengths.end());
    const FeatureRow row =
        NormalizeFootprint(f, k, static_cast<Aggregate>(trial % 3));
    identity_mismatches += !std::equal(row.begin(), row.end(), f.lengths.begin(),
                                       f.lengths.end());
  }
  if (identity_mismatches) {
    failed.push_back(fmt::format("normalization {} mismatches", identity_mismatches));
  }

  std::string detail = "stress, procrustes, crossings, wilcoxon, outlier, normalization";
  if (!failed.empty()) {
    detail = "failed:";
    for (const auto& f : failed) detail += " [" + f + "]";
  } else {
    detail += fmt::format(" ok (outlier flagged {}/100)", flagged);
  }
  return {failed.empty(), detail};
}

Outcome RomeNonImprovement() {
  std::vector<fs::path> files;
  for (const auto& entry :
       fs::directory_iterator(DECLUTTER_SOURCE_DIR "/data/rome_sample")) {
    if (entry.path().extension() == ".graph") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  const auto records = RunDataset(
      "rome", {Aggregate::kMin, Aggregate::kMax, Aggregate::kMean}, true, files);
  bool pass = true;
  std::string detail = fmt::format("{} graphs;", files.size());
  for (const char* v : {"H_min", "H_max", "H_mean", "H_nb"}) {
    const Paired t = PairedCrossings(records, v, "orig");
    const bool improves = t.median_a < t.median_b && t.p < kSignificanceLevel;
    pass &= !improves;
    detail += fmt::format(" {} {} vs {} p={:.3g};", v, t.median_a, t.median_b, t.p);
  }
  return {pass, detail};
}

std::vector<Criterion> Criteria() {
  return {
      {1, "footprint fidelity on the 7x7 grid with three augmenting edges", 1.0,
       FootprintFidelity},
      {2, "max-flow footprint cardinality vs exhaustive search", 120.0,
       MaxFlowOracle},
      {3, "grids: H_min reduces crossings vs redraw (FA2)", 600.0,
       [] {
         const Paired t = PairedCrossings(GridRecords(), "H_min", "redraw");
         return Outcome{t.graphs >= 20 && t.median_a < t.median_b &&
                            t.p < kSignificanceLevel,
                        Describe(t, "H_min", "redraw")};
       }},
      {4, "triangulations: H_mean reduces crossings vs redraw (FA2)", 600.0,
       [] {
         return ReducesCrossings("triangulations", Aggregate::kMean, "H_mean",
                                 "redraw");
       }},
      {5, "deep triangulations: H_max reduces crossings vs orig (FA2)", 600.0,
       [] { return ReducesCrossings("deep", Aggregate::kMax, "H_max", "orig"); }},
      {6, "plain grids drawn planar by FA2 best-of-5", 0.0, PlanarGridSanity},
      {7, "fixed 0.01 weighting beats redraw on augmented grids", 0.0,
       FixedWeightReplication},
      {8, "property suite", 0.0, PropertySuite},
      {9, "Rome sample: heuristics do not significantly reduce crossings", 0.0,
       RomeNonImprovement},
  };
}

}  // namespace
}  // namespace declutter

int main(int argc, char** argv) {
  using namespace declutter;
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const Criterion& c : Criteria()) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("error: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0.0 && seconds >= c.limit_seconds) {
      outcome.pass = false;
      outcome.detail += fmt::format("; exceeded {} s", c.limit_seconds);
    }
    failures += !outcome.pass;
    fmt::print("{} [{}] {}: {} ({:.1f} s)\n", outcome.pass ? "PASS" : "FAIL", c.id,
               c.name, outcome.detail, seconds);
    std::fflush(stdout);
  }
  std::error_code ignored;
  fs::remove_all(ScratchRoot(), ignored);
  return failures == 0 ? 0 : 1;
}
