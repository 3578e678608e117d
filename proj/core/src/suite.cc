#include "declutter/suite.h"

#include <algorithm>

#include <fmt/format.h>

#include "declutter/error.h"
#include "declutter/metrics.h"

namespace declutter {

std::string_view EngineName(Engine engine) {
  return engine == Engine::kFa2 ? "fa2" : "sm";
}

Engine ParseEngine(std::string_view name) {
  if (name == "fa2") return Engine::kFa2;
  if (name == "sm") return Engine::kSm;
  throw Error(ErrorCode::kInvalidConfig, fmt::format("unknown engine '{}'", name));
}

std::string_view VariantName(Variant variant) {
  switch (variant) {
    case Variant::kOrig: return "orig";
    case Variant::kOnTop: return "on_top";
    case Variant::kRedraw: return "redraw";
    case Variant::kHMin: return "H_min";
    case Variant::kHMax: return "H_max";
    case Variant::kHMean: return "H_mean";
    case Variant::kHNb: return "H_nb";
    case Variant::kFixed: return "fixed";
  }
  return "unknown";
}

Variant ParseVariant(std::string_view name) {
  for (Variant v : {Variant::kOrig, Variant::kOnTop, Variant::kRedraw,
                    Variant::kHMin, Variant::kHMax, Variant::kHMean,
                    Variant::kHNb, Variant::kFixed}) {
    if (VariantName(v) == name) return v;
  }
  throw Error(ErrorCode::kInvalidConfig,
              fmt::format("unknown variant '{}'", name));
}

std::vector<Variant> SuiteVariants(bool augmented) {
  if (augmented) {
    return {Variant::kOrig, Variant::kOnTop, Variant::kRedraw, Variant::kHMin,
            Variant::kHMax, Variant::kHMean, Variant::kHNb};
  }
  return {Variant::kOrig, Variant::kHMin, Variant::kHMax, Variant::kHMean,
          Variant::kHNb};
}

Layout DrawVariant(Engine engine, Variant variant, const Graph& g,
                   const Layout& init, const EngineConfig& config) {
  Layout out;
  if (engine == Engine::kFa2) {
    Fa2Params params = config.fa2;
    if (variant == Variant::kHNb || variant == Variant::kFixed) {
      params.weight_exponent = 1.0;
    }
    out = ForceAtlas2(g, init, params);
  } else {
    SmParams params = config.sm;
    if (variant == Variant::kHNb) {
      params.weighting = PairWeighting::kNeighborhood;
      out = StressMajorization(g.Unweighted(), init, params);
    } else {
      out = StressMajorization(g, init, params);
    }
  }
  out.variant = std::string(VariantName(variant));
  return out;
}

BestLayout BestOfK(const std::function<Layout(const Layout&)>& draw,
                   const Graph& scored, std::span<const std::uint64_t> seeds) {
  if (seeds.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "best-of-k needs at least one seed");
  }
  std::optional<BestLayout> best;
  std::vector<int> per_run;
  for (std::uint64_t seed : seeds) {
    Layout layout = draw(RandomLayout(scored.num_nodes(), seed));
    layout.seed = seed;
    const int crossings = CountCrossings(scored, layout.coords);
    per_run.push_back(crossings);
    if (!best || crossings < best->crossings ||
        (crossings == best->crossings && seed < best->layout.seed)) {
      best = BestLayout{std::move(layout), crossings, {}};
    }
  }
  best->crossings_per_run = std::move(per_run);
  return std::move(*best);
}

Graph VariantGraph(Variant variant, const Graph& g,
                   const std::vector<Footprint>& footprints,
                   const HeuristicParams& heuristic) {
  HeuristicParams params = heuristic;
  switch (variant) {
    case Variant::kOrig:
    case Variant::kOnTop:
    case Variant::kRedraw:
      return g.Unweighted();
    case Variant::kHMin: params.aggregate = Aggregate::kMin; break;
    case Variant::kHMax: params.aggregate = Aggregate::kMax; break;
    case Variant::kHMean: params.aggregate = Aggregate::kMean; break;
    case Variant::kHNb: return WeightNeighborhood(g.Unweighted());
    case Variant::kFixed: return WeightFixed(g, 0.01);
  }
  return WeightHeuristic(g, footprints, params).weighted;
}

SuiteResult LayoutSuite(const Graph& planar, const std::optional<Graph>& augmented,
                        Engine engine, const SuiteParams& params,
                        std::span<const Variant> only) {
  const Graph& target = augmented ? *augmented : planar;
  std::vector<Variant> variants = SuiteVariants(augmented.has_value());
  if (!only.empty()) {
    variants.assign(only.begin(), only.end());
    for (Variant v : variants) {
      const bool needs_augmented = v == Variant::kOnTop ||
                                   v == Variant::kRedraw ||
                                   v == Variant::kFixed;
      if (needs_augmented && !augmented) {
        throw Error(ErrorCode::kInvalidConfig,
                    fmt::format("variant {} needs an augmented graph",
                                VariantName(v)));
      }
    }
  }
  const bool needs_footprints = std::any_of(
      variants.begin(), variants.end(), [](Variant v) {
        return v == Variant::kHMin || v == Variant::kHMax || v == Variant::kHMean;
      });
  const std::vector<Footprint> footprints =
      needs_footprints ? AllFootprints(target) : std::vector<Footprint>{};

  SuiteResult result;
  auto draw_best = [&](Variant v, const Graph& drawn) {
    BestLayout best = BestOfK(
        [&](const Layout& init) {
          return DrawVariant(engine, v, drawn, init, params.engine);
        },
        target, params.restart_seeds);
    result.layouts[v] = std::move(best.layout);
  };

  for (Variant v : variants) {
    switch (v) {
      case Variant::kOrig: {
        BestLayout best = BestOfK(
            [&](const Layout& init) {
              return DrawVariant(engine, v, planar.Unweighted(), init,
                                 params.engine);
            },
            planar, params.restart_seeds);
        result.layouts[v] = std::move(best.layout);
        break;
      }
      case Variant::kOnTop:
        break;  // filled from orig below
      case Variant::kFixed: {
        Graph fixed = WeightFixed(target, params.fixed_weight);
        draw_best(v, fixed);
        break;
      }
      default:
        draw_best(v, VariantGraph(v, target, footprints, params.heuristic));
        break;
    }
  }
  if (std::find(variants.begin(), variants.end(), Variant::kOnTop) !=
      variants.end()) {
    auto orig = result.layouts.find(Variant::kOrig);
    Layout on_top = orig != result.layouts.end()
                        ? orig->second
                        : BestOfK(
                              [&](const Layout& init) {
                                return DrawVariant(engine, Variant::kOrig,
                                                   planar.Unweighted(), init,
                                                   params.engine);
                              },
                              planar, params.restart_seeds)
                              .layout;
    on_top.variant = std::string(VariantName(Variant::kOnTop));
    result.layouts[Variant::kOnTop] = std::move(on_top);
  }
  for (const auto& [v, layout] : result.layouts) {
    const Graph& scored = v == Variant::kOrig ? planar : target;
    result.crossings[v] = CountCrossings(scored, layout.coords);
  }
  return result;
}

}  // namespace declutter
