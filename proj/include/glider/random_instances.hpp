#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "glider/tve_search.hpp"

namespace glider {

/// A small self-contained planning problem: at most a 4x4 lattice with 8
/// headings, two terminals and up to four dive profiles, flying through a
/// randomly drawn still, uniform, surface-only or jet-only field whose
/// magnitude stays below the vehicle speed.
struct RandomInstance {
  Graph graph;
  std::vector<DiveProfile> profiles;
  FlowEnvironment env;
  VehicleParams vehicle;
  IntegrationParams integration;
  double t0 = 0.0;

  PlanInputs inputs() const { return {profiles, env, vehicle, integration}; }
};

RandomInstance random_instance(std::mt19937_64& rng);

/// Samples departure times from t_begin to t_end in steps of `step` and checks
/// that t + cost(t) never decreases on any edge (the FIFO property) and that
/// no edge switches between feasible and infeasible inside the window.
bool edge_costs_fifo(const Graph& g, const PlanInputs& in, double t_begin, double t_end,
                     double step);

struct OracleComparison {
  std::size_t instances = 0;
  std::size_t rejected = 0;  // regenerated: no path, or FIFO check failed
  std::size_t time_mismatches = 0;
  std::size_t path_mismatches = 0;  // counted only where the optimum is unique
  std::size_t unique_optima = 0;
  double max_time_error = 0.0;
};

/// Draws `count` FIFO-checked instances from `seed` and compares plan() with
/// brute_force_plan() on each. Times must agree within `tolerance`.
OracleComparison compare_with_oracle(std::uint64_t seed, std::size_t count, double tolerance);

}  // namespace glider
