#include "glider/random_instances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "glider/errors.hpp"

namespace glider {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

RandomInstance random_instance(std::mt19937_64& rng) {
  GridSpec spec;
  spec.h = uniform(rng, 0.3, 0.6);
  spec.sector_order = 1;
  spec.x_min = 0.0;
  spec.y_min = 0.0;
  spec.x_max = (pick(rng, 2, 4) - 1) * spec.h;
  spec.y_max = (pick(rng, 2, 4) - 1) * spec.h;

  Graph g = build_grid(spec);
  const double sx = uniform(rng, spec.x_min, spec.x_max);
  const double sy = uniform(rng, spec.y_min, spec.y_max);
  double gx = 0.0;
  double gy = 0.0;
  do {
    gx = uniform(rng, spec.x_min, spec.x_max);
    gy = uniform(rng, spec.y_min, spec.y_max);
  } while (std::hypot(gx - sx, gy - sy) < 0.5 * spec.h);
  insert_terminal(g, sx, sy, TerminalRole::Start);
  insert_terminal(g, gx, gy, TerminalRole::Goal);

  std::vector<DiveProfile> profiles;
  const int n_profiles = pick(rng, 1, 4);
  for (int i = 0; i < n_profiles; ++i) {
    const double climb = uniform(rng, 0.0, 30.0);
    profiles.push_back({climb, climb + uniform(rng, 20.0, 150.0), static_cast<std::size_t>(i)});
  }

  VehicleParams vehicle;
  vehicle.w_vert = uniform(rng, 20.0, 200.0);

  FlowEnvironment env;
  switch (pick(rng, 0, 3)) {
    case 0:
      env.mode = FlowMode::StillWater;
      break;
    case 1: {
      env.mode = FlowMode::Uniform;
      const double speed = uniform(rng, 0.0, 0.8 * vehicle.v_bf);
      const double heading = uniform(rng, 0.0, 2.0 * std::numbers::pi);
      env.uniform_u = speed * std::cos(heading);
      env.uniform_v = speed * std::sin(heading);
      break;
    }
    case 2:
      env.mode = FlowMode::SurfaceOnly;
      env.surface.W0 = uniform(rng, -0.8, 0.8) * vehicle.v_bf;
      env.surface.d = uniform(rng, 1.0, 3.0);
      env.surface.z_decay = uniform(rng, 5.0, 40.0);
      env.jet.omega = uniform(rng, 0.05, 0.5);
      break;
    default:
      env.mode = FlowMode::JetOnly;
      vehicle.v_bf = uniform(rng, 1.5, 2.5);
      env.jet.B0 = uniform(rng, 0.8, 1.5);
      env.jet.epsilon = uniform(rng, 0.0, 0.4);
      break;
  }

  IntegrationParams integration;
  integration.dt = 0.01;
  return RandomInstance{std::move(g), std::move(profiles), env, vehicle, integration,
                        uniform(rng, 0.0, 10.0)};
}

bool edge_costs_fifo(const Graph& g, const PlanInputs& in, double t_begin, double t_end,
                     double step) {
  SerialEvaluator serial;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgeGeometry geom = g.geometry(e);
    std::optional<double> previous_arrival;
    bool previous_feasible = true;
    bool first = true;
    for (double t = t_begin; t <= t_end + 0.5 * step; t += step) {
      const EdgeCostResult c =
          edge_cost(geom, t, in.profiles, in.env, in.vehicle, in.integration, serial);
      if (!first && c.feasible() != previous_feasible) return false;
      first = false;
      previous_feasible = c.feasible();
      if (!c.feasible()) continue;
      const double arrival = t + *c.best_time;
      if (previous_arrival && arrival < *previous_arrival) return false;
      previous_arrival = arrival;
    }
  }
  return true;
}

OracleComparison compare_with_oracle(std::uint64_t seed, std::size_t count, double tolerance) {
  std::mt19937_64 rng(seed);
  OracleComparison out;
  SerialEvaluator serial;
  while (out.instances < count) {
    RandomInstance inst = random_instance(rng);
    const PlanInputs in = inst.inputs();

    std::optional<PathResult> planned;
    try {
      planned = plan(inst.graph, inst.t0, in, serial);
    } catch (const NoPathError&) {
      ++out.rejected;
      continue;
    }
    if (!edge_costs_fifo(inst.graph, in, inst.t0, planned->arrival, 0.1)) {
      ++out.rejected;
      continue;
    }
    ++out.instances;

    bool unique = false;
    const PathResult oracle = brute_force_plan(inst.graph, inst.t0, in, 12, tolerance, &unique);
    const double err = std::abs(oracle.arrival - planned->arrival);
    out.max_time_error = std::max(out.max_time_error, err);
    if (err > tolerance) ++out.time_mismatches;
    if (unique) {
      ++out.unique_optima;
      if (oracle.legs != planned->legs) ++out.path_mismatches;
    }
  }
  return out;
}

}  // namespace glider
