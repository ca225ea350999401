#include "glider/tve_search.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "glider/errors.hpp"

namespace glider {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Label {
  double arrival = kInf;
  bool settled = false;
  std::optional<PathLeg> via;
};

void require_terminals(const Graph& g) {
  if (!g.start() || !g.goal()) {
    throw ValidationError("graph", "start and goal terminals are required");
  }
}

}  // namespace

PathResult plan(const Graph& g, double t0, const PlanInputs& in, ProfileEvaluator& evaluator,
                const SearchOptions& options, SearchStats* stats) {
  require_terminals(g);
  const NodeId start = *g.start();
  const NodeId goal = *g.goal();

  SearchStats local;
  std::vector<Label> labels(g.node_count());
  using Entry = std::tuple<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

  labels[start].arrival = t0;
  queue.emplace(t0, start);

  while (!queue.empty()) {
    const auto [t_node, n] = queue.top();
    queue.pop();
    Label& label = labels[n];
    if (label.settled || t_node > label.arrival) continue;
    label.settled = true;
    ++local.settled;
    if (n == goal) break;

    for (EdgeId e : g.out_edges(n)) {
      const Edge& edge = g.edge(e);
      if (labels[edge.to].settled) continue;
      const EdgeGeometry geom = g.geometry(e);
      const EdgeCostResult cost =
          edge_cost(geom, t_node, in.profiles, in.env, in.vehicle, in.integration, evaluator);
      ++local.edge_evaluations;
      if (!cost.feasible()) continue;

      const double arrival = t_node + *cost.best_time;
      if (options.fifo_check) {
        const double later = t_node + options.fifo_probe;
        const EdgeCostResult probe =
            edge_cost(geom, later, in.profiles, in.env, in.vehicle, in.integration, evaluator);
        if (!probe.feasible() || later + *probe.best_time < arrival) ++local.fifo_violations;
      }

      Label& target = labels[edge.to];
      if (arrival < target.arrival) {
        target.arrival = arrival;
        target.via = PathLeg{n, edge.to, t_node, *cost.best_time, cost.best_profile_index};
        queue.emplace(arrival, edge.to);
      }
    }
  }
  if (stats) *stats = local;

  if (!labels[goal].settled) throw NoPathError("goal is unreachable from start");

  PathResult result;
  result.t0 = t0;
  result.arrival = labels[goal].arrival;
  for (NodeId n = goal; n != start;) {
    const PathLeg& leg = *labels[n].via;
    result.legs.push_back(leg);
    n = leg.from;
  }
  std::reverse(result.legs.begin(), result.legs.end());
  return result;
}

PathResult brute_force_plan(const Graph& g, double t0, const PlanInputs& in,
                            std::size_t max_hops, double tie_tolerance, bool* unique) {
  require_terminals(g);
  if (g.node_count() > 20) {
    throw std::invalid_argument("brute_force_plan is limited to graphs of at most 20 nodes");
  }
  const NodeId start = *g.start();
  const NodeId goal = *g.goal();

  SerialEvaluator serial;
  std::optional<PathResult> best;
  double runner_up = kInf;
  std::vector<bool> on_path(g.node_count(), false);
  std::vector<PathLeg> legs;

  std::function<void(NodeId, double)> extend = [&](NodeId n, double t) {
    if (best && t > best->arrival + tie_tolerance) return;
    if (n == goal) {
      if (!best || t < best->arrival) {
        if (best) runner_up = best->arrival;
        best = PathResult{t0, t, legs};
      } else {
        runner_up = std::min(runner_up, t);
      }
      return;
    }
    if (legs.size() == max_hops) return;
    on_path[n] = true;
    for (EdgeId e : g.out_edges(n)) {
      const Edge& edge = g.edge(e);
      if (on_path[edge.to]) continue;
      const EdgeCostResult cost = edge_cost(g.geometry(e), t, in.profiles, in.env, in.vehicle,
                                            in.integration, serial);
      if (!cost.feasible()) continue;
      legs.push_back({n, edge.to, t, *cost.best_time, cost.best_profile_index});
      extend(edge.to, t + *cost.best_time);
      legs.pop_back();
    }
    on_path[n] = false;
  };
  extend(start, t0);

  if (!best) throw NoPathError("no start->goal path within the hop bound");
  if (unique) *unique = runner_up > best->arrival + tie_tolerance;
  return *best;
}

}  // namespace glider
