#include "glider/grid_graph.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>

#include "glider/errors.hpp"

namespace glider {

namespace {

// Slack so the far edge of the box is kept when (max - min) / h is integral
// up to rounding.
constexpr double kLatticeSlack = 1e-9;

std::size_t lattice_count(double lo, double hi, double h) {
  return static_cast<std::size_t>(std::floor((hi - lo) / h + kLatticeSlack)) + 1;
}

}  // namespace

void GridSpec::validate() const {
  for (double v : {x_min, x_max, y_min, y_max, h}) {
    if (!std::isfinite(v)) throw ValidationError("grid", "bounds must be finite");
  }
  if (!(x_max > x_min)) throw ValidationError("grid.x_max", "must be > x_min");
  if (!(y_max > y_min)) throw ValidationError("grid.y_max", "must be > y_min");
  if (!(h > 0.0)) throw ValidationError("grid.h", "must be > 0");
  if (sector_order < 1) throw ValidationError("grid.sectors", "must be >= 1");
  if (columns() < 2 || rows() < 2) {
    throw ValidationError("grid", "box too small for a 2x2 lattice");
  }
}

std::size_t GridSpec::columns() const { return lattice_count(x_min, x_max, h); }
std::size_t GridSpec::rows() const { return lattice_count(y_min, y_max, h); }

EdgeGeometry Graph::geometry(EdgeId id) const {
  const Edge& e = edges_.at(id);
  const Node& a = nodes_.at(e.from);
  return {a.x, a.y, e.length, e.dir_x, e.dir_y};
}

NodeId Graph::add_node(double x, double y) {
  const NodeId id = nodes_.size();
  nodes_.push_back({id, x, y});
  adjacency_.emplace_back();
  return id;
}

void Graph::add_directed(NodeId a, NodeId b) {
  const Node& na = nodes_.at(a);
  const Node& nb = nodes_.at(b);
  const double dx = nb.x - na.x;
  const double dy = nb.y - na.y;
  const double len = std::hypot(dx, dy);
  adjacency_[a].push_back(edges_.size());
  edges_.push_back({a, b, len, dx / len, dy / len});
}

void Graph::connect(NodeId a, NodeId b) {
  if (a == b) throw ValidationError("edge", "self loop");
  add_directed(a, b);
  add_directed(b, a);
}

void Graph::set_terminal(TerminalRole role, NodeId id) {
  (role == TerminalRole::Start ? start_ : goal_) = id;
}

std::vector<std::pair<int, int>> neighbor_offsets(int order) {
  std::vector<std::pair<int, int>> out;
  for (int di = -order; di <= order; ++di) {
    for (int dj = -order; dj <= order; ++dj) {
      if (di == 0 && dj == 0) continue;
      if (std::gcd(std::abs(di), std::abs(dj)) != 1) continue;
      out.emplace_back(di, dj);
    }
  }
  return out;
}

Graph build_grid(const GridSpec& spec) {
  spec.validate();
  Graph g(spec);
  const std::size_t nx = spec.columns();
  const std::size_t ny = spec.rows();

  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      g.add_node(spec.x_min + static_cast<double>(i) * spec.h,
                 spec.y_min + static_cast<double>(j) * spec.h);
    }
  }
  g.mark_grid_complete();

  // Each pair is emitted once, from its lower node id.
  const auto offsets = neighbor_offsets(spec.sector_order);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const NodeId a = j * nx + i;
      for (auto [di, dj] : offsets) {
        const long ti = static_cast<long>(i) + di;
        const long tj = static_cast<long>(j) + dj;
        if (ti < 0 || tj < 0 || ti >= static_cast<long>(nx) || tj >= static_cast<long>(ny)) {
          continue;
        }
        const NodeId b = static_cast<std::size_t>(tj) * nx + static_cast<std::size_t>(ti);
        if (b > a) g.connect(a, b);
      }
    }
  }
  return g;
}

NodeId insert_terminal(Graph& g, double x, double y, TerminalRole role) {
  const GridSpec& spec = g.spec();
  if (!(x >= spec.x_min && x <= spec.x_max && y >= spec.y_min && y <= spec.y_max)) {
    throw ValidationError(role == TerminalRole::Start ? "start" : "goal",
                          "terminal lies outside the grid box");
  }
  // Same square (Chebyshev) reach as the grid stencil.
  const double reach = spec.sector_order * spec.h * (1.0 + kLatticeSlack);

  std::vector<NodeId> targets;
  for (NodeId n = 0; n < g.grid_node_count(); ++n) {
    const Node& node = g.node(n);
    const double dx = std::abs(node.x - x);
    const double dy = std::abs(node.y - y);
    if (std::hypot(dx, dy) > 1e-12 && dx <= reach && dy <= reach) targets.push_back(n);
  }
  if (targets.empty()) {
    throw ValidationError(role == TerminalRole::Start ? "start" : "goal",
                          "no grid node within connection radius");
  }
  const NodeId id = g.add_node(x, y);
  for (NodeId n : targets) g.connect(id, n);
  g.set_terminal(role, id);
  return id;
}

void write_graph_stats_csv(const Graph& g, std::ostream& os) {
  std::map<std::size_t, std::size_t> histogram;
  for (NodeId n = 0; n < g.grid_node_count(); ++n) ++histogram[g.out_edges(n).size()];
  os << "key,value\n";
  os << "nodes," << g.node_count() << "\n";
  os << "edges," << g.edge_count() << "\n";
  for (auto [degree, count] : histogram) os << "degree_" << degree << "," << count << "\n";
}

}  // namespace glider
