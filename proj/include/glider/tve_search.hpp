#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "glider/glider_cost.hpp"
#include "glider/grid_graph.hpp"

namespace glider {

struct PathLeg {
  NodeId from = 0;
  NodeId to = 0;
  double departure = 0.0;
  double travel_time = 0.0;
  std::size_t profile_index = 0;

  double arrival() const { return departure + travel_time; }
  friend bool operator==(const PathLeg&, const PathLeg&) = default;
};

struct PathResult {
  double t0 = 0.0;
  double arrival = 0.0;
  std::vector<PathLeg> legs;

  double total_time() const { return arrival - t0; }
  friend bool operator==(const PathResult&, const PathResult&) = default;
};

/// Everything an edge-cost query needs besides the edge and departure time.
struct PlanInputs {
  std::span<const DiveProfile> profiles;
  FlowEnvironment env;
  VehicleParams vehicle;
  IntegrationParams integration;
};

struct SearchOptions {
  /// When set, every relaxed edge is re-evaluated at departure + fifo_probe
  /// and FIFO violations are counted. Diagnostics only; the search result is
  /// unchanged.
  bool fifo_check = false;
  double fifo_probe = 0.05;
};

struct SearchStats {
  std::size_t settled = 0;
  std::size_t edge_evaluations = 0;
  std::size_t fifo_violations = 0;
};

/// Time-dependent label-setting search from the start terminal to the goal
/// terminal. Edge costs are evaluated at the settle time of their tail node;
/// there is no waiting at nodes. Queue ties break on node id, equal-time
/// predecessors keep the first one found. Throws NoPathError when the goal
/// cannot be settled.
PathResult plan(const Graph& g, double t0, const PlanInputs& in, ProfileEvaluator& evaluator,
                const SearchOptions& options = {}, SearchStats* stats = nullptr);

/// Exhaustive depth-first enumeration of simple start->goal paths of at most
/// `max_hops` legs, with costs accumulated in path order. Branches whose time
/// already exceed the incumbent by more than `tie_tolerance` are cut.
/// `unique` (if given) reports whether every other path arrives more than
/// `tie_tolerance` later. Equal arrivals keep the first path enumerated.
/// Intended as a test oracle on graphs of at most 20 nodes.
PathResult brute_force_plan(const Graph& g, double t0, const PlanInputs& in,
                            std::size_t max_hops = 12, double tie_tolerance = 0.0,
                            bool* unique = nullptr);

}  // namespace glider
