// declutter: runs the clutter-weighting experiment from a JSON config.
//
//   declutter pipeline --config configs/default.json --jobs 4
//   declutter render --graph g.graph --layout g.orig.layout --svg out.svg

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "declutter/error.h"
#include "declutter/experiment.h"
#include "declutter/layout.h"
#include "declutter/render.h"

namespace {

using declutter::ExperimentConfig;
using declutter::RunOptions;

struct GlobalFlags {
  std::string config;
  std::string out;
  int jobs = 1;
  bool resume = false;
};

void AddGlobalFlags(CLI::App* cmd, GlobalFlags& flags, bool needs_config) {
  auto* config = cmd->add_option("--config", flags.config, "experiment config (JSON)");
  if (needs_config) config->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", flags.out, "output directory (overrides the config)");
  cmd->add_option("--jobs", flags.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--resume", flags.resume, "skip outputs that already exist");
}

ExperimentConfig Load(const GlobalFlags& flags) {
  ExperimentConfig config = declutter::LoadConfig(flags.config);
  if (!flags.out.empty()) config.output_dir = flags.out;
  return config;
}

RunOptions Options(const GlobalFlags& flags) {
  return RunOptions{flags.jobs, flags.resume};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clutter-aware weighting of nearly planar graphs for spring layouts"};
  app.require_subcommand(1);

  GlobalFlags flags;
  auto* generate = app.add_subcommand("generate", "write graph datasets and manifests");
  auto* layout = app.add_subcommand("layout", "compute the layout variants");
  auto* evaluate = app.add_subcommand("evaluate", "quality metrics -> records.csv");
  auto* compare = app.add_subcommand("compare", "Wilcoxon comparisons -> comparison.csv");
  auto* render = app.add_subcommand("render", "draw layouts as SVG");
  auto* pipeline = app.add_subcommand("pipeline", "all stages in sequence");
  for (auto* cmd : {generate, layout, evaluate, pipeline}) {
    AddGlobalFlags(cmd, flags, true);
  }

  std::string records;
  std::string comparison;
  AddGlobalFlags(compare, flags, false);
  compare->add_option("--records", records, "records CSV (default <out>/records.csv)");
  compare->add_option("--output", comparison,
                      "comparison CSV (default <out>/comparison.csv)");

  std::string graph_file;
  std::string layout_file;
  std::string svg_file;
  AddGlobalFlags(render, flags, false);
  render->add_option("--graph", graph_file, "graph file")->check(CLI::ExistingFile);
  render->add_option("--layout", layout_file, "layout file")->check(CLI::ExistingFile);
  render->add_option("--svg", svg_file, "SVG output (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) declutter::RunGenerate(Load(flags), Options(flags));
    if (layout->parsed()) declutter::RunLayout(Load(flags), Options(flags));
    if (evaluate->parsed()) declutter::RunEvaluate(Load(flags), Options(flags));
    if (pipeline->parsed()) declutter::RunPipeline(Load(flags), Options(flags));

    if (compare->parsed()) {
      std::filesystem::path root = flags.out;
      if (root.empty() && !flags.config.empty()) root = Load(flags).output_dir;
      const declutter::OutputPaths paths{root};
      if (records.empty()) records = paths.Records().string();
      if (comparison.empty()) comparison = paths.Comparison().string();
      declutter::RunCompare(records, comparison);
    }

    if (render->parsed()) {
      if (!graph_file.empty() || !layout_file.empty()) {
        if (graph_file.empty() || layout_file.empty()) {
          std::cerr << "render needs both --graph and --layout\n";
          return 2;
        }
        const std::string svg = declutter::RenderSvg(
            declutter::LoadGraphFile(graph_file),
            declutter::LoadLayoutFile(layout_file));
        if (svg_file.empty()) {
          std::cout << svg;
        } else {
          std::ofstream(svg_file) << svg;
        }
      } else if (!flags.config.empty()) {
        declutter::RunRender(Load(flags), Options(flags));
      } else {
        std::cerr << "render needs --graph/--layout or --config\n";
        return 2;
      }
    }
  } catch (const declutter::Error& e) {
    std::cerr << "declutter: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "declutter: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
