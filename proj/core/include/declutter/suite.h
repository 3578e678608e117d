#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "declutter/clutter_weighting.h"
#include "declutter/engines.h"
#include "declutter/graph.h"
#include "declutter/layout.h"

namespace declutter {

enum class Engine { kFa2, kSm };

std::string_view EngineName(Engine engine);
Engine ParseEngine(std::string_view name);

enum class Variant { kOrig, kOnTop, kRedraw, kHMin, kHMax, kHMean, kHNb, kFixed };

std::string_view VariantName(Variant variant);
Variant ParseVariant(std::string_view name);

// Variants drawn for a graph family: seven with an augmented graph, five
// without (no on_top / redraw).
std::vector<Variant> SuiteVariants(bool augmented);

struct EngineConfig {
  Fa2Params fa2;
  SmParams sm;
};

// Draws `g` (already carrying the variant's weights) with the weight
// semantics of `variant`:
//   FA2: weights are desired lengths (attraction * w^-1), except H_nb and
//        the fixed baseline whose weights are attraction multipliers (w^+1).
//   SM:  weights are edge lengths; H_nb rescales the adjacent-pair stress
//        terms by the neighborhood weight instead.
Layout DrawVariant(Engine engine, Variant variant, const Graph& g,
                   const Layout& init, const EngineConfig& config);

struct BestLayout {
  Layout layout;
  int crossings = 0;
  std::vector<int> crossings_per_run;
};

// Runs `draw` from RandomLayout(n, seed) for every seed and keeps the drawing
// of `scored` with the fewest crossings (ties: smallest seed).
BestLayout BestOfK(const std::function<Layout(const Layout&)>& draw,
                   const Graph& scored, std::span<const std::uint64_t> seeds);

// Graph carrying the weights of `variant`, derived from the graph the
// variant is drawn on (the augmented graph when there is one).
Graph VariantGraph(Variant variant, const Graph& g,
                   const std::vector<Footprint>& footprints,
                   const HeuristicParams& heuristic);

struct SuiteParams {
  EngineConfig engine;
  HeuristicParams heuristic;  // aggregate is set per variant
  std::vector<std::uint64_t> restart_seeds;
  double fixed_weight = 0.01;
};

struct SuiteResult {
  std::map<Variant, Layout> layouts;
  std::map<Variant, int> crossings;
};

// Layouts of every applicable variant. `augmented` is absent for deep
// triangulations and external graphs; the heuristic then runs on `planar`.
SuiteResult LayoutSuite(const Graph& planar, const std::optional<Graph>& augmented,
                        Engine engine, const SuiteParams& params,
                        std::span<const Variant> only = {});

}  // namespace declutter
