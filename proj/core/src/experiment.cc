#include "declutter/experiment.h"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "declutter/error.h"
#include "declutter/metrics.h"
#include "declutter/parallel.h"
#include "declutter/random.h"
#include "declutter/render.h"

namespace declutter {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

[[noreturn]] void ConfigError(const std::string& message) {
  throw Error(ErrorCode::kInvalidConfig, message);
}

void RejectUnknownKeys(const json& object, std::initializer_list<const char*> known,
                       std::string_view where) {
  for (const auto& [key, value] : object.items()) {
    if (std::none_of(known.begin(), known.end(),
                     [&](const char* k) { return key == k; })) {
      ConfigError(fmt::format("unknown key '{}' in {}", key, where));
    }
  }
}

IntRange ParseRange(const json& value, std::string_view what) {
  if (!value.is_array() || value.size() != 2) {
    ConfigError(fmt::format("{} must be a [lo, hi] pair", what));
  }
  IntRange r{value[0].get<int>(), value[1].get<int>()};
  if (r.lo > r.hi) ConfigError(fmt::format("{} has lo > hi", what));
  return r;
}

bool ValidName(const std::string& name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
           c == '.';
  });
}

// FNV-1a, so per-dataset seed streams do not depend on dataset order.
std::uint64_t NameHash(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

DatasetConfig ParseDataset(const json& j, const fs::path& base_dir) {
  RejectUnknownKeys(j,
                    {"name", "family", "files", "count", "rows", "cols", "nodes",
                     "augment_fraction", "seed"},
                    "dataset");
  DatasetConfig d;
  d.name = j.at("name").get<std::string>();
  if (!ValidName(d.name)) ConfigError(fmt::format("bad dataset name '{}'", d.name));
  if (j.contains("family") == j.contains("files")) {
    ConfigError(fmt::format("dataset {} needs exactly one of family / files", d.name));
  }
  if (j.contains("family")) d.family = ParseFamily(j["family"].get<std::string>());
  if (j.contains("files")) {
    for (const auto& f : j["files"]) {
      fs::path p = f.get<std::string>();
      d.files.push_back(p.is_absolute() ? p : base_dir / p);
    }
    if (d.files.empty()) ConfigError(fmt::format("dataset {} lists no files", d.name));
  }
  d.count = j.value("count", d.family ? 0 : static_cast<int>(d.files.size()));
  if (d.count < 1) ConfigError(fmt::format("dataset {} count must be >= 1", d.name));
  if (!d.family && d.count > static_cast<int>(d.files.size())) {
    ConfigError(fmt::format("dataset {} count exceeds its file list", d.name));
  }
  if (j.contains("rows")) d.rows = ParseRange(j["rows"], "rows");
  if (j.contains("cols")) d.cols = ParseRange(j["cols"], "cols");
  if (j.contains("nodes")) d.nodes = ParseRange(j["nodes"], "nodes");
  d.augment_fraction = j.value("augment_fraction", d.augment_fraction);
  if (!j.contains("seed")) ConfigError(fmt::format("dataset {} needs a seed", d.name));
  d.seed = j["seed"].get<std::uint64_t>();
  return d;
}

// Writes through a temporary so an interrupted run never leaves a truncated
// output that --resume would trust.
void WriteFileAtomic(const fs::path& path, const std::string& contents) {
  fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(ErrorCode::kIo, fmt::format("cannot write {}", tmp.string()));
    out << contents;
    if (!out) throw Error(ErrorCode::kIo, fmt::format("write failed: {}", tmp.string()));
  }
  fs::rename(tmp, path);
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string FormatOptional(const std::optional<double>& v) {
  return v ? fmt::format("{:.17g}", *v) : std::string();
}

std::optional<double> ParseOptional(const std::string& cell, int line) {
  if (cell.empty()) return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kParseError,
                fmt::format("line {}: bad number '{}'", line, cell));
  }
}

class TimingLog {
 public:
  explicit TimingLog(fs::path path) : path_(std::move(path)) {}

  void Add(std::string_view stage, std::string_view dataset,
           std::string_view graph_id, std::string_view engine, double seconds) {
    std::lock_guard lock(mutex_);
    rows_.push_back(fmt::format("{},{},{},{},{:.6f}", stage, dataset, graph_id,
                                engine, seconds));
  }

  ~TimingLog() {
    if (rows_.empty()) return;
    std::sort(rows_.begin(), rows_.end());
    const bool fresh = !fs::exists(path_);
    fs::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::app);
    if (fresh) out << "stage,dataset,graph_id,engine,seconds\n";
    for (const auto& row : rows_) out << row << '\n';
  }

 private:
  fs::path path_;
  std::mutex mutex_;
  std::vector<std::string> rows_;
};

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

struct LoadedGraph {
  Graph planar;
  std::optional<Graph> augmented;
  const Graph& target() const { return augmented ? *augmented : planar; }
};

LoadedGraph LoadEntry(const OutputPaths& paths, const std::string& dataset,
                      const ManifestEntry& entry) {
  LoadedGraph g{LoadGraphFile(paths.GraphFile(dataset, entry.graph_id, false)),
                std::nullopt};
  if (entry.augmented) {
    g.augmented = LoadGraphFile(paths.GraphFile(dataset, entry.graph_id, true));
  }
  return g;
}

const Graph& ScoredGraph(const LoadedGraph& g, Variant v) {
  return v == Variant::kOrig ? g.planar : g.target();
}

}  // namespace

ExperimentConfig ParseConfig(const std::string& json_text,
                             const fs::path& base_dir) {
  ExperimentConfig c;
  try {
    const json j = json::parse(json_text);
    RejectUnknownKeys(j,
                      {"output_dir", "datasets", "heuristic", "engines", "fa2",
                       "sm", "restarts", "layout_seed"},
                      "config");
    if (j.contains("output_dir")) {
      fs::path out = j["output_dir"].get<std::string>();
      c.output_dir = out.is_absolute() ? out : base_dir / out;
    }
    if (!j.contains("datasets") || j["datasets"].empty()) {
      ConfigError("config lists no datasets");
    }
    std::set<std::string> names;
    for (const auto& d : j["datasets"]) {
      c.datasets.push_back(ParseDataset(d, base_dir));
      if (!names.insert(c.datasets.back().name).second) {
        ConfigError(fmt::format("duplicate dataset '{}'", c.datasets.back().name));
      }
    }
    if (j.contains("heuristic")) {
      const json& h = j["heuristic"];
      RejectUnknownKeys(h,
                        {"k", "aggregates", "neighborhood", "trees", "subsample",
                         "threshold", "seed"},
                        "heuristic");
      c.k = h.value("k", c.k);
      if (h.contains("aggregates")) {
        c.aggregates.clear();
        for (const auto& a : h["aggregates"]) {
          c.aggregates.push_back(ParseAggregate(a.get<std::string>()));
        }
      }
      c.neighborhood = h.value("neighborhood", c.neighborhood);
      c.forest.num_trees = h.value("trees", c.forest.num_trees);
      c.forest.subsample_size = h.value("subsample", c.forest.subsample_size);
      c.forest.threshold = h.value("threshold", c.forest.threshold);
      c.heuristic_seed = h.value("seed", c.heuristic_seed);
    }
    if (j.contains("engines")) {
      c.engines.clear();
      for (const auto& e : j["engines"]) {
        c.engines.push_back(ParseEngine(e.get<std::string>()));
      }
    }
    if (j.contains("fa2")) {
      const json& f = j["fa2"];
      RejectUnknownKeys(f,
                        {"iterations", "repulsion", "gravity", "weight_exponent",
                         "jitter_tolerance", "initial_speed", "max_displacement"},
                        "fa2");
      Fa2Params& p = c.engine.fa2;
      p.iterations = f.value("iterations", p.iterations);
      p.repulsion = f.value("repulsion", p.repulsion);
      p.gravity = f.value("gravity", p.gravity);
      p.weight_exponent = f.value("weight_exponent", p.weight_exponent);
      p.jitter_tolerance = f.value("jitter_tolerance", p.jitter_tolerance);
      p.initial_speed = f.value("initial_speed", p.initial_speed);
      p.max_displacement = f.value("max_displacement", p.max_displacement);
    }
    if (j.contains("sm")) {
      const json& s = j["sm"];
      RejectUnknownKeys(s, {"iterations", "tolerance"}, "sm");
      c.engine.sm.iterations = s.value("iterations", c.engine.sm.iterations);
      c.engine.sm.tolerance = s.value("tolerance", c.engine.sm.tolerance);
    }
    c.restarts = j.value("restarts", c.restarts);
    c.layout_seed = j.value("layout_seed", c.layout_seed);
  } catch (const json::exception& e) {
    ConfigError(e.what());
  }
  if (c.k < 1) ConfigError("heuristic k must be >= 1");
  if (c.engines.empty()) ConfigError("no engines");
  if (c.restarts < 1) ConfigError("restarts must be >= 1");
  if (c.forest.num_trees < 1 || c.forest.subsample_size < 2) {
    ConfigError("forest needs >= 1 tree and subsample >= 2");
  }
  if (c.engine.fa2.iterations < 1 || c.engine.sm.iterations < 1) {
    ConfigError("iterations must be >= 1");
  }
  return c;
}

ExperimentConfig LoadConfig(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, fmt::format("cannot read {}", path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str(), path.parent_path());
}

std::vector<Variant> ExperimentVariants(const ExperimentConfig& config,
                                        bool augmented) {
  std::vector<Variant> out;
  for (Variant v : SuiteVariants(augmented)) {
    switch (v) {
      case Variant::kHMin:
      case Variant::kHMax:
      case Variant::kHMean: {
        const Aggregate m = v == Variant::kHMin   ? Aggregate::kMin
                            : v == Variant::kHMax ? Aggregate::kMax
                                                  : Aggregate::kMean;
        if (std::find(config.aggregates.begin(), config.aggregates.end(), m) !=
            config.aggregates.end()) {
          out.push_back(v);
        }
        break;
      }
      case Variant::kHNb:
        if (config.neighborhood) out.push_back(v);
        break;
      default:
        out.push_back(v);
    }
  }
  return out;
}

fs::path OutputPaths::DatasetDir(const std::string& dataset) const {
  return root / "datasets" / dataset;
}

fs::path OutputPaths::Manifest(const std::string& dataset) const {
  return DatasetDir(dataset) / "manifest.csv";
}

fs::path OutputPaths::GraphFile(const std::string& dataset, const std::string& id,
                                bool augmented) const {
  return DatasetDir(dataset) / (id + (augmented ? ".aug.graph" : ".graph"));
}

fs::path OutputPaths::LayoutFile(const std::string& dataset, Engine engine,
                                 const std::string& id, Variant variant) const {
  return root / "layouts" / dataset / std::string(EngineName(engine)) /
         fmt::format("{}.{}.layout", id, VariantName(variant));
}

fs::path OutputPaths::RenderDir(const std::string& dataset) const {
  return root / "render" / dataset;
}

std::vector<ManifestEntry> ReadManifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, fmt::format("cannot read {}", path.string()));
  std::vector<ManifestEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 || line.empty()) continue;
    const auto cells = SplitCsvLine(line);
    if (cells.size() != 5) {
      throw Error(ErrorCode::kParseError,
                  fmt::format("{}:{}: expected 5 cells", path.string(), line_no));
    }
    try {
      entries.push_back({cells[0], std::stoi(cells[1]), std::stoi(cells[2]),
                         cells[3] == "1", std::stoi(cells[4])});
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kParseError,
                  fmt::format("{}:{}: bad number", path.string(), line_no));
    }
  }
  return entries;
}

void WriteRecordsCsv(std::ostream& out, std::span<const Record> records) {
  out << "dataset,graph_id,engine,variant,nc,ang_res,cros_res,ps\n";
  for (const Record& r : records) {
    out << fmt::format("{},{},{},{},{},{},{},{}\n", r.dataset, r.graph_id,
                       r.engine, r.variant, r.nc, FormatOptional(r.ang_res),
                       FormatOptional(r.cros_res), FormatOptional(r.ps));
  }
}

std::vector<Record> ReadRecordsCsv(std::istream& in) {
  std::vector<Record> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 || line.empty()) continue;
    const auto cells = SplitCsvLine(line);
    if (cells.size() != 8) {
      throw Error(ErrorCode::kParseError,
                  fmt::format("records line {}: expected 8 cells", line_no));
    }
    Record r{cells[0], cells[1], cells[2], cells[3], 0,
             ParseOptional(cells[5], line_no), ParseOptional(cells[6], line_no),
             ParseOptional(cells[7], line_no)};
    const auto nc = ParseOptional(cells[4], line_no);
    if (!nc) {
      throw Error(ErrorCode::kIncompleteRecords,
                  fmt::format("records line {}: missing nc", line_no));
    }
    r.nc = static_cast<int>(*nc);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<Comparison> CompareRecords(std::span<const Record> records) {
  // (dataset, engine) -> variant -> graph -> record
  using Cells = std::map<std::string, std::map<std::string, const Record*>>;
  std::map<std::pair<std::string, std::string>, Cells> groups;
  std::vector<std::pair<std::string, std::string>> group_order;
  for (const Record& r : records) {
    auto key = std::make_pair(r.dataset, r.engine);
    if (!groups.contains(key)) group_order.push_back(key);
    auto& slot = groups[key][r.variant][r.graph_id];
    if (slot) {
      throw Error(ErrorCode::kIncompleteRecords,
                  fmt::format("duplicate record {}/{}/{}/{}", r.dataset,
                              r.graph_id, r.engine, r.variant));
    }
    slot = &r;
  }

  const std::vector<std::string> heuristic_order = {"H_min", "H_max", "H_mean",
                                                    "H_nb"};
  struct Metric {
    const char* name;
    std::optional<double> (*get)(const Record&);
  };
  const Metric metrics[] = {
      {"nc", [](const Record& r) -> std::optional<double> { return r.nc; }},
      {"ang_res", [](const Record& r) { return r.ang_res; }},
      {"cros_res", [](const Record& r) { return r.cros_res; }},
      {"ps", [](const Record& r) { return r.ps; }},
  };

  std::vector<Comparison> out;
  for (const auto& key : group_order) {
    const Cells& cells = groups[key];
    std::set<std::string> graph_ids;
    for (const auto& [variant, by_graph] : cells) {
      for (const auto& [id, record] : by_graph) graph_ids.insert(id);
    }
    for (const auto& [variant, by_graph] : cells) {
      if (by_graph.size() != graph_ids.size()) {
        throw Error(ErrorCode::kIncompleteRecords,
                    fmt::format("{}/{}: variant {} has {} of {} graphs",
                                key.first, key.second, variant, by_graph.size(),
                                graph_ids.size()));
      }
    }
    const std::string baseline = cells.contains("redraw") ? "redraw" : "orig";
    if (!cells.contains(baseline)) {
      throw Error(ErrorCode::kIncompleteRecords,
                  fmt::format("{}/{}: no {} records", key.first, key.second,
                              baseline));
    }
    for (const Metric& metric : metrics) {
      for (const std::string& variant : heuristic_order) {
        if (!cells.contains(variant)) continue;
        std::vector<double> xs, ys;
        for (const std::string& id : graph_ids) {
          const auto a = metric.get(*cells.at(variant).at(id));
          const auto b = metric.get(*cells.at(baseline).at(id));
          if (a && b) {
            xs.push_back(*a);
            ys.push_back(*b);
          }
        }
        if (xs.empty()) continue;
        Comparison c{key.first, key.second, metric.name, variant, baseline,
                     Median(xs), Median(ys)};
        try {
          const WilcoxonResult w = WilcoxonSignedRank(xs, ys);
          c.statistic = w.statistic;
          c.p = w.p;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kAllZeroDifferences) throw;
          c.statistic = 0.0;
          c.p = 1.0;
        }
        c.significant = c.p < kSignificanceLevel;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

void RunGenerate(const ExperimentConfig& config, const RunOptions& options) {
  const OutputPaths paths{config.output_dir};
  TimingLog timings(paths.Timings());
  for (const DatasetConfig& d : config.datasets) {
    std::vector<ManifestEntry> manifest(d.count);
    ParallelFor(d.count, options.jobs, [&](int i) {
      const auto start = std::chrono::steady_clock::now();
      ManifestEntry& entry = manifest[i];
      LoadedGraph g;
      if (d.family) {
        entry.graph_id = fmt::format("g{:03d}", i);
        Rng rng(DeriveSeed(d.seed, {static_cast<std::uint64_t>(i)}));
        GenSpec spec;
        spec.family = *d.family;
        if (spec.family == Family::kGrid) {
          spec.rows = UniformInt(rng, d.rows.lo, d.rows.hi);
          spec.cols = UniformInt(rng, d.cols.lo, d.cols.hi);
        } else {
          spec.nodes = UniformInt(rng, d.nodes.lo, d.nodes.hi);
        }
        spec.augment_fraction = d.augment_fraction;
        spec.seed = DeriveSeed(d.seed, {static_cast<std::uint64_t>(i), 1});
        GeneratedInstance inst = Generate(spec);
        g = {std::move(inst.planar), std::move(inst.augmented)};
      } else {
        entry.graph_id = d.files[i].stem().string();
        if (!ValidName(entry.graph_id)) {
          ConfigError(fmt::format("file name '{}' is not a usable graph id",
                                  entry.graph_id));
        }
        g.planar = LoadGraphFile(d.files[i]);
      }
      entry.nodes = g.target().num_nodes();
      entry.edges = g.target().num_edges();
      entry.augmented = g.augmented.has_value();
      entry.augmenting_edges = g.target().num_augmenting();
      const fs::path planar_path = paths.GraphFile(d.name, entry.graph_id, false);
      const fs::path aug_path = paths.GraphFile(d.name, entry.graph_id, true);
      if (!options.resume || !fs::exists(planar_path) ||
          (entry.augmented && !fs::exists(aug_path))) {
        std::ostringstream planar_text;
        WriteGraph(planar_text, g.planar);
        WriteFileAtomic(planar_path, planar_text.str());
        if (g.augmented) {
          std::ostringstream aug_text;
          WriteGraph(aug_text, *g.augmented);
          WriteFileAtomic(aug_path, aug_text.str());
        }
      }
      timings.Add("generate", d.name, entry.graph_id, "", SecondsSince(start));
    });
    std::set<std::string> ids;
    for (const auto& e : manifest) {
      if (!ids.insert(e.graph_id).second) {
        ConfigError(fmt::format("dataset {} has duplicate graph id {}", d.name,
                                e.graph_id));
      }
    }
    std::string text = "graph_id,nodes,edges,augmented,augmenting_edges\n";
    for (const auto& e : manifest) {
      text += fmt::format("{},{},{},{},{}\n", e.graph_id, e.nodes, e.edges,
                          e.augmented ? 1 : 0, e.augmenting_edges);
    }
    WriteFileAtomic(paths.Manifest(d.name), text);
  }
}

void RunLayout(const ExperimentConfig& config, const RunOptions& options) {
  const OutputPaths paths{config.output_dir};
  TimingLog timings(paths.Timings());
  for (const DatasetConfig& d : config.datasets) {
    const std::vector<ManifestEntry> manifest = ReadManifest(paths.Manifest(d.name));
    const std::uint64_t dataset_key = NameHash(d.name);
    const int tasks = static_cast<int>(manifest.size() * config.engines.size());
    ParallelFor(tasks, options.jobs, [&](int task) {
      const int index = task / static_cast<int>(config.engines.size());
      const Engine engine = config.engines[task % config.engines.size()];
      const ManifestEntry& entry = manifest[index];

      std::vector<Variant> todo;
      for (Variant v : ExperimentVariants(config, entry.augmented)) {
        if (!options.resume ||
            !fs::exists(paths.LayoutFile(d.name, engine, entry.graph_id, v))) {
          todo.push_back(v);
        }
      }
      if (todo.empty()) return;

      const auto start = std::chrono::steady_clock::now();
      const LoadedGraph g = LoadEntry(paths, d.name, entry);
      const std::uint64_t graph_key =
          DeriveSeed(dataset_key, {static_cast<std::uint64_t>(index)});
      SuiteParams params;
      params.engine = config.engine;
      params.heuristic.k = config.k;
      params.heuristic.forest = config.forest;
      params.heuristic.seed = DeriveSeed(config.heuristic_seed, {graph_key});
      for (int r = 0; r < config.restarts; ++r) {
        params.restart_seeds.push_back(DeriveSeed(
            config.layout_seed, {graph_key, static_cast<std::uint64_t>(r)}));
      }
      const SuiteResult result =
          LayoutSuite(g.planar, g.augmented, engine, params, todo);
      for (Variant v : todo) {
        std::ostringstream text;
        WriteLayout(text, result.layouts.at(v));
        WriteFileAtomic(paths.LayoutFile(d.name, engine, entry.graph_id, v),
                        text.str());
      }
      timings.Add("layout", d.name, entry.graph_id, EngineName(engine),
                  SecondsSince(start));
    });
  }
}

void RunEvaluate(const ExperimentConfig& config, const RunOptions& options) {
  const OutputPaths paths{config.output_dir};
  TimingLog timings(paths.Timings());
  std::vector<Record> records;
  for (const DatasetConfig& d : config.datasets) {
    const std::vector<ManifestEntry> manifest = ReadManifest(paths.Manifest(d.name));
    std::vector<std::vector<Record>> per_graph(manifest.size());
    ParallelFor(static_cast<int>(manifest.size()), options.jobs, [&](int index) {
      const auto start = std::chrono::steady_clock::now();
      const ManifestEntry& entry = manifest[index];
      const LoadedGraph g = LoadEntry(paths, d.name, entry);
      for (Engine engine : config.engines) {
        std::map<Variant, Layout> layouts;
        for (Variant v : ExperimentVariants(config, entry.augmented)) {
          const fs::path file = paths.LayoutFile(d.name, engine, entry.graph_id, v);
          if (!fs::exists(file)) {
            throw Error(ErrorCode::kMissingLayout,
                        fmt::format("missing {}", file.string()));
          }
          layouts[v] = LoadLayoutFile(file);
          if (layouts[v].size() != ScoredGraph(g, v).num_nodes()) {
            throw Error(ErrorCode::kMismatchedFiles,
                        fmt::format("{} does not match its graph", file.string()));
          }
        }
        const Layout& reference = layouts.at(Variant::kOrig);
        for (Variant v : ExperimentVariants(config, entry.augmented)) {
          const MetricReport m =
              EvaluateLayout(ScoredGraph(g, v), layouts.at(v).coords,
                             std::span<const Point>(reference.coords));
          per_graph[index].push_back({d.name, entry.graph_id,
                                      std::string(EngineName(engine)),
                                      std::string(VariantName(v)), m.nc, m.ang_res,
                                      m.cros_res, m.ps});
        }
      }
      timings.Add("evaluate", d.name, entry.graph_id, "", SecondsSince(start));
    });
    for (auto& rows : per_graph) {
      records.insert(records.end(), rows.begin(), rows.end());
    }
  }
  std::ostringstream text;
  WriteRecordsCsv(text, records);
  WriteFileAtomic(paths.Records(), text.str());
}

void RunCompare(const fs::path& records, const fs::path& comparison) {
  std::ifstream in(records);
  if (!in) throw Error(ErrorCode::kIo, fmt::format("cannot read {}", records.string()));
  const std::vector<Record> rows = ReadRecordsCsv(in);
  const std::vector<Comparison> result = CompareRecords(rows);
  std::ostringstream text;
  WriteComparisonCsv(text, result);
  WriteFileAtomic(comparison, text.str());
}

void RunRender(const ExperimentConfig& config, const RunOptions& options) {
  (void)options;
  const OutputPaths paths{config.output_dir};
  for (const DatasetConfig& d : config.datasets) {
    const std::vector<ManifestEntry> manifest = ReadManifest(paths.Manifest(d.name));
    if (manifest.empty()) continue;
    const ManifestEntry& entry = manifest.front();
    const LoadedGraph g = LoadEntry(paths, d.name, entry);
    for (Engine engine : config.engines) {
      const std::vector<Variant> variants = ExperimentVariants(config, entry.augmented);
      std::vector<Layout> layouts;
      layouts.reserve(variants.size());
      for (Variant v : variants) {
        const fs::path file = paths.LayoutFile(d.name, engine, entry.graph_id, v);
        if (!fs::exists(file)) {
          throw Error(ErrorCode::kMissingLayout,
                      fmt::format("missing {}", file.string()));
        }
        layouts.push_back(LoadLayoutFile(file));
      }
      std::vector<PanelItem> items;
      for (std::size_t i = 0; i < variants.size(); ++i) {
        items.push_back({&ScoredGraph(g, variants[i]), &layouts[i],
                         std::string(VariantName(variants[i]))});
      }
      RenderOptions cell;
      cell.width = cell.height = 320.0;
      WriteFileAtomic(paths.RenderDir(d.name) /
                          fmt::format("{}.{}.svg", entry.graph_id, EngineName(engine)),
                      RenderPanel(items, 4, cell));
    }
  }
}

void RunPipeline(const ExperimentConfig& config, const RunOptions& options) {
  const OutputPaths paths{config.output_dir};
  RunGenerate(config, options);
  RunLayout(config, options);
  RunEvaluate(config, options);
  RunCompare(paths.Records(), paths.Comparison());
  RunRender(config, options);
}

}  // namespace declutter
