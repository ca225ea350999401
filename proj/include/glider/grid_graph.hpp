#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace glider {

using NodeId = std::size_t;
using EdgeId = std::size_t;

/// Rectangular lattice over the mission box. `sector_order` is the Chebyshev
/// radius of the neighbor stencil: 1, 2, 3 give 8, 16, 32 headings.
struct GridSpec {
  double x_min = 0.0;
  double x_max = 8.0;
  double y_min = -2.5;
  double y_max = 2.5;
  double h = 0.4;
  int sector_order = 3;

  void validate() const;
  std::size_t columns() const;
  std::size_t rows() const;
};

struct Node {
  NodeId id = 0;
  double x = 0.0;
  double y = 0.0;
};

struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  double length = 0.0;
  double dir_x = 0.0;
  double dir_y = 0.0;
};

/// Value snapshot of an edge's geometry. Enough to fly the edge without the
/// graph at hand.
struct EdgeGeometry {
  double x0 = 0.0;
  double y0 = 0.0;
  double length = 0.0;
  double dir_x = 1.0;
  double dir_y = 0.0;
};

enum class TerminalRole { Start, Goal };

class Graph {
public:
  explicit Graph(GridSpec spec) : spec_(spec) {}

  const GridSpec& spec() const { return spec_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t grid_node_count() const { return grid_nodes_; }

  const Node& node(NodeId id) const { return nodes_.at(id); }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Node> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> out_edges(NodeId id) const { return adjacency_.at(id); }
  EdgeGeometry geometry(EdgeId id) const;

  std::optional<NodeId> start() const { return start_; }
  std::optional<NodeId> goal() const { return goal_; }

  NodeId add_node(double x, double y);
  /// Adds the edge pair a->b and b->a.
  void connect(NodeId a, NodeId b);
  void set_terminal(TerminalRole role, NodeId id);
  void mark_grid_complete() { grid_nodes_ = nodes_.size(); }

private:
  void add_directed(NodeId a, NodeId b);

  GridSpec spec_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adjacency_;
  std::size_t grid_nodes_ = 0;
  std::optional<NodeId> start_;
  std::optional<NodeId> goal_;
};

/// Coprime lattice offsets (di, dj) with max(|di|,|dj|) <= order, in
/// lexicographic order.
std::vector<std::pair<int, int>> neighbor_offsets(int order);

/// Lattice nodes in row-major order from (x_min, y_min), each connected along
/// every stencil offset that stays inside the box.
Graph build_grid(const GridSpec& spec);

/// Adds a start or goal node at (x, y) linked to every grid node whose x and y
/// offsets are both within sector_order * h. Coincident grid nodes are skipped.
NodeId insert_terminal(Graph& g, double x, double y, TerminalRole role);

/// CSV: node/edge counts followed by the out-degree histogram of grid nodes.
void write_graph_stats_csv(const Graph& g, std::ostream& os);

}  // namespace glider
