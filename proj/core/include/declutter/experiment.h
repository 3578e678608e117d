#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "declutter/clutter_weighting.h"
#include "declutter/generators.h"
#include "declutter/stats.h"
#include "declutter/suite.h"

namespace declutter {

struct IntRange {
  int lo = 0;
  int hi = 0;
};

// One family of graphs: either generated (`family` set) or read from
// explicit files.
struct DatasetConfig {
  std::string name;
  std::optional<Family> family;
  std::vector<std::filesystem::path> files;
  int count = 0;
  IntRange rows{6, 14};
  IntRange cols{6, 14};
  IntRange nodes{26, 100};
  double augment_fraction = 0.1;
  std::uint64_t seed = 0;
};

struct ExperimentConfig {
  std::vector<DatasetConfig> datasets;
  int k = 4;
  std::vector<Aggregate> aggregates{Aggregate::kMin, Aggregate::kMax,
                                    Aggregate::kMean};
  bool neighborhood = true;  // include H_nb
  IsolationForestParams forest;
  std::uint64_t heuristic_seed = 0;
  std::vector<Engine> engines{Engine::kFa2, Engine::kSm};
  EngineConfig engine;
  int restarts = 5;
  std::uint64_t layout_seed = 0;
  std::filesystem::path output_dir = "results";
};

// JSON config; relative file paths resolve against `base_dir`. Throws
// InvalidConfig.
ExperimentConfig ParseConfig(const std::string& json_text,
                             const std::filesystem::path& base_dir = {});
ExperimentConfig LoadConfig(const std::filesystem::path& path);

// Variants drawn for one graph under `config`.
std::vector<Variant> ExperimentVariants(const ExperimentConfig& config,
                                        bool augmented);

struct RunOptions {
  int jobs = 1;
  bool resume = false;
};

struct ManifestEntry {
  std::string graph_id;
  int nodes = 0;
  int edges = 0;
  bool augmented = false;
  int augmenting_edges = 0;
};

// Output tree under config.output_dir:
//   datasets/<dataset>/manifest.csv, <id>.graph, <id>.aug.graph
//   layouts/<dataset>/<engine>/<id>.<variant>.layout
//   records.csv, comparison.csv, timings.csv, render/<dataset>/*.svg
struct OutputPaths {
  std::filesystem::path root;

  std::filesystem::path DatasetDir(const std::string& dataset) const;
  std::filesystem::path Manifest(const std::string& dataset) const;
  std::filesystem::path GraphFile(const std::string& dataset,
                                  const std::string& id, bool augmented) const;
  std::filesystem::path LayoutFile(const std::string& dataset, Engine engine,
                                   const std::string& id, Variant variant) const;
  std::filesystem::path Records() const { return root / "records.csv"; }
  std::filesystem::path Comparison() const { return root / "comparison.csv"; }
  std::filesystem::path Timings() const { return root / "timings.csv"; }
  std::filesystem::path RenderDir(const std::string& dataset) const;
};

std::vector<ManifestEntry> ReadManifest(const std::filesystem::path& path);

struct Record {
  std::string dataset;
  std::string graph_id;
  std::string engine;
  std::string variant;
  int nc = 0;
  std::optional<double> ang_res;
  std::optional<double> cros_res;
  std::optional<double> ps;
};

// `dataset,graph_id,engine,variant,nc,ang_res,cros_res,ps`; absent values are
// empty cells.
void WriteRecordsCsv(std::ostream& out, std::span<const Record> records);
std::vector<Record> ReadRecordsCsv(std::istream& in);

// Heuristic variants against redraw when the dataset has redraw rows, else
// against orig, for every engine and metric. Throws IncompleteRecords when a
// (graph, variant) cell is missing.
std::vector<Comparison> CompareRecords(std::span<const Record> records);

// Pipeline stages. Each reads what earlier stages wrote under
// config.output_dir.
void RunGenerate(const ExperimentConfig& config, const RunOptions& options);
void RunLayout(const ExperimentConfig& config, const RunOptions& options);
void RunEvaluate(const ExperimentConfig& config, const RunOptions& options);
void RunCompare(const std::filesystem::path& records,
                const std::filesystem::path& comparison);
void RunRender(const ExperimentConfig& config, const RunOptions& options);
void RunPipeline(const ExperimentConfig& config, const RunOptions& options);

}  // namespace declutter
