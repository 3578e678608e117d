#include "declutter/engines.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "declutter/clutter_weighting.h"
#include "declutter/error.h"

namespace declutter {

std::vector<Point> Fa2Forces(const Graph& g, std::span<const Point> coords,
                             const Fa2Params& params) {
  const int n = g.num_nodes();
  std::vector<Point> force(n);
  std::vector<double> mass(n);
  for (NodeId i = 0; i < n; ++i) mass[i] = g.degree(i) + 1.0;

  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      const Point delta = coords[i] - coords[j];
      const double dist2 = Dot(delta, delta);
      if (dist2 > 0.0) {
        const double factor = params.repulsion * mass[i] * mass[j] / dist2;
        force[i] = force[i] + factor * delta;
        force[j] = force[j] - factor * delta;
      }
    }
  }

  if (params.gravity > 0.0) {
    Point centroid;
    for (const Point& p : coords) centroid = centroid + p;
    centroid = (1.0 / n) * centroid;
    for (NodeId i = 0; i < n; ++i) {
      const Point delta = coords[i] - centroid;
      const double dist = Norm(delta);
      if (dist > 0.0) {
        force[i] = force[i] - (params.gravity * mass[i] / dist) * delta;
      }
    }
  }

  for (const Edge& e : g.edges()) {
    const Point delta = coords[e.u] - coords[e.v];
    const double factor = std::pow(e.weight, params.weight_exponent);
    force[e.u] = force[e.u] - factor * delta;
    force[e.v] = force[e.v] + factor * delta;
  }
  return force;
}

Layout ForceAtlas2(const Graph& g, const Layout& init,
                   const Fa2Params& params) {
  const int n = g.num_nodes();
  if (init.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("initial layout has {} points for {} nodes",
                            init.size(), n));
  }
  if (params.iterations < 1 || !(params.repulsion > 0.0) ||
      params.gravity < 0.0) {
    throw Error(ErrorCode::kInvalidConfig, "invalid FA2 parameters");
  }

  std::vector<Point> coords = init.coords;
  std::vector<Point> previous(n);
  std::vector<double> mass(n);
  for (NodeId i = 0; i < n; ++i) mass[i] = g.degree(i) + 1.0;

  double speed = params.initial_speed;
  double speed_efficiency = 1.0;
  constexpr double kMinSpeedEfficiency = 0.05;
  constexpr double kMaxRise = 0.5;

  for (int iter = 0; iter < params.iterations; ++iter) {
    const std::vector<Point> force = Fa2Forces(g, coords, params);

    double total_swinging = 0.0;
    double total_traction = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      total_swinging += mass[i] * Norm(previous[i] - force[i]);
      total_traction += 0.5 * mass[i] * Norm(previous[i] + force[i]);
    }

    // Global speed adaptation.
    const double estimated_jitter = 0.05 * std::sqrt(static_cast<double>(n));
    const double min_jitter = std::sqrt(estimated_jitter);
    constexpr double kMaxJitter = 10.0;
    double jitter =
        params.jitter_tolerance *
        std::max(min_jitter,
                 std::min(kMaxJitter, estimated_jitter * total_traction /
                                          (static_cast<double>(n) * n)));
    if (total_traction > 0.0 && total_swinging / total_traction > 2.0) {
      if (speed_efficiency > kMinSpeedEfficiency) speed_efficiency *= 0.5;
      jitter = std::max(jitter, params.jitter_tolerance);
    }
    const double target_speed =
        total_swinging > 0.0
            ? jitter * speed_efficiency * total_traction / total_swinging
            : std::numeric_limits<double>::infinity();
    if (total_swinging > jitter * total_traction) {
      if (speed_efficiency > kMinSpeedEfficiency) speed_efficiency *= 0.7;
    } else if (speed < 1000.0) {
      speed_efficiency *= 1.3;
    }
    speed += std::min(target_speed - speed, kMaxRise * speed);

    // Per-node swing damping with a displacement cap.
    for (NodeId i = 0; i < n; ++i) {
      const double swinging = mass[i] * Norm(previous[i] - force[i]);
      double factor = speed / (1.0 + std::sqrt(speed * swinging));
      const double magnitude = Norm(force[i]);
      if (factor * magnitude > params.max_displacement) {
        factor = params.max_displacement / magnitude;
      }
      coords[i] = coords[i] + factor * force[i];
      if (!std::isfinite(coords[i].x) || !std::isfinite(coords[i].y)) {
        throw Error(ErrorCode::kNumericalDivergence,
                    fmt::format("FA2 node {} non-finite at iteration {}", i,
                                iter));
      }
    }
    previous = force;
  }

  Layout out;
  out.coords = std::move(coords);
  out.engine = "fa2";
  out.variant = init.variant;
  out.seed = init.seed;
  out.iterations = params.iterations;
  return out;
}

StressModel::StressModel(const Graph& g, PairWeighting weighting)
    : n_(g.num_nodes()),
      dist_(static_cast<std::size_t>(n_) * n_, 0.0),
      weight_(static_cast<std::size_t>(n_) * n_, 0.0) {
  const DistanceMatrix d = ShortestPathLengths(g, DistanceMode::kWeighted);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i == j || d(i, j) == kUnreachable) continue;
      dist_[Index(i, j)] = d(i, j);
      weight_[Index(i, j)] = 1.0 / (d(i, j) * d(i, j));
    }
  }
  if (weighting == PairWeighting::kNeighborhood) {
    for (const Edge& e : g.edges()) {
      const double scale = NeighborhoodWeight(g, e.u, e.v);
      weight_[Index(e.u, e.v)] *= scale;
      weight_[Index(e.v, e.u)] *= scale;
    }
  }
}

double StressModel::Stress(std::span<const Point> coords) const {
  double total = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const double w = weight_[Index(i, j)];
      if (w == 0.0) continue;
      const double gap = Norm(coords[i] - coords[j]) - dist_[Index(i, j)];
      total += w * gap * gap;
    }
  }
  return total;
}

void StressModel::Sweep(std::vector<Point>& coords) const {
  for (int i = 0; i < n_; ++i) {
    Point numerator;
    double denominator = 0.0;
    for (int j = 0; j < n_; ++j) {
      const double w = weight_[Index(i, j)];
      if (w == 0.0) continue;
      const Point delta = coords[i] - coords[j];
      const double len = Norm(delta);
      Point target = coords[j];
      if (len > 0.0) target = target + (dist_[Index(i, j)] / len) * delta;
      numerator = numerator + w * target;
      denominator += w;
    }
    if (denominator > 0.0) coords[i] = (1.0 / denominator) * numerator;
  }
}

Layout StressMajorization(const Graph& g, const Layout& init,
                          const SmParams& params,
                          std::vector<double>* stress_trace) {
  if (init.size() != g.num_nodes()) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("initial layout has {} points for {} nodes",
                            init.size(), g.num_nodes()));
  }
  if (params.iterations < 1 || !(params.tolerance > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "invalid SM parameters");
  }
  const StressModel model(g, params.weighting);
  std::vector<Point> coords = init.coords;
  double stress = model.Stress(coords);
  if (stress_trace) stress_trace->assign(1, stress);

  int iter = 0;
  while (iter < params.iterations) {
    model.Sweep(coords);
    ++iter;
    const double next = model.Stress(coords);
    if (!std::isfinite(next)) {
      throw Error(ErrorCode::kNumericalDivergence,
                  fmt::format("SM stress non-finite at iteration {}", iter));
    }
    if (stress_trace) stress_trace->push_back(next);
    const bool converged =
        stress == 0.0 || (stress - next) / stress < params.tolerance;
    stress = next;
    if (converged) break;
  }

  Layout out;
  out.coords = std::move(coords);
  out.engine = "sm";
  out.variant = init.variant;
  out.seed = init.seed;
  out.iterations = iter;
  return out;
}

}  // namespace declutter
