#include "glider/mission.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "glider/errors.hpp"

namespace glider {

namespace pt = boost::property_tree;

namespace {

constexpr const char* kAttr = "<xmlattr>";

double parse_double(const std::string& field, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ValidationError(field, "expected a number, got '" + text + "'");
  }
  return v;
}

template <class Int>
Int parse_int(const std::string& field, const std::string& text) {
  Int v{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ValidationError(field, "expected an integer, got '" + text + "'");
  }
  return v;
}

bool parse_bool(const std::string& field, const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ValidationError(field, "expected true/false, got '" + text + "'");
}

// Binds attribute names of one element to setters; anything else is rejected.
class ElementReader {
public:
  explicit ElementReader(std::string element) : element_(std::move(element)) {}

  ElementReader& number(const std::string& name, double& target) {
    setters_[name] = [field = element_ + "." + name, &target](const std::string& v) {
      target = parse_double(field, v);
    };
    return *this;
  }
  template <class Int>
  ElementReader& integer(const std::string& name, Int& target) {
    setters_[name] = [field = element_ + "." + name, &target](const std::string& v) {
      target = parse_int<Int>(field, v);
    };
    return *this;
  }
  ElementReader& flag(const std::string& name, bool& target) {
    setters_[name] = [field = element_ + "." + name, &target](const std::string& v) {
      target = parse_bool(field, v);
    };
    return *this;
  }
  ElementReader& text(const std::string& name, std::function<void(const std::string&)> set) {
    setters_[name] = std::move(set);
    return *this;
  }

  void read(const pt::ptree& node) const {
    for (const auto& [key, child] : node) {
      if (key == kAttr) {
        for (const auto& [attr, value] : child) {
          auto it = setters_.find(attr);
          if (it == setters_.end()) {
            throw ValidationError(element_ + "." + attr, "unknown attribute");
          }
          it->second(value.data());
        }
      } else if (key != "<xmlcomment>") {
        throw ValidationError(element_ + "." + key, "unexpected child element");
      }
    }
    if (!node.data().empty()) throw ValidationError(element_, "unexpected text content");
  }

private:
  std::string element_;
  std::map<std::string, std::function<void(const std::string&)>> setters_;
};

MissionConfig mission_from_tree(const pt::ptree& doc) {
  const pt::ptree* root_ptr = nullptr;
  for (const auto& [key, child] : doc) {
    if (key == "<xmlcomment>") continue;
    if (key != "mission" || root_ptr) {
      throw ValidationError("mission", "document must have a single <mission> root element");
    }
    root_ptr = &child;
  }
  if (!root_ptr) throw ValidationError("mission", "document has no <mission> root element");
  const pt::ptree& root = *root_ptr;

  MissionConfig cfg;
  FlowEnvironment& env = cfg.environment;
  std::map<std::string, ElementReader> readers;

  readers.emplace("environment", ElementReader("environment")
                                     .text("mode",
                                           [&](const std::string& v) {
                                             env.mode = flow_mode_from_string(v);
                                           })
                                     .number("uniform_u", env.uniform_u)
                                     .number("uniform_v", env.uniform_v));
  readers.emplace("jet", ElementReader("jet")
                             .number("B0", env.jet.B0)
                             .number("epsilon", env.jet.epsilon)
                             .number("omega", env.jet.omega)
                             .number("theta", env.jet.theta)
                             .number("k", env.jet.k)
                             .number("c", env.jet.c));
  readers.emplace("surface", ElementReader("surface")
                                 .number("W0", env.surface.W0)
                                 .number("d", env.surface.d)
                                 .number("z_decay", env.surface.z_decay));
  readers.emplace("vehicle", ElementReader("vehicle")
                                 .number("v_bf", cfg.vehicle.v_bf)
                                 .number("w_vert", cfg.vehicle.w_vert));
  readers.emplace("integration", ElementReader("integration")
                                     .number("dt", cfg.integration.dt)
                                     .integer("max_steps", cfg.integration.max_steps)
                                     .number("eps_speed", cfg.integration.eps_speed));
  readers.emplace("grid", ElementReader("grid")
                              .number("x_min", cfg.grid.x_min)
                              .number("x_max", cfg.grid.x_max)
                              .number("y_min", cfg.grid.y_min)
                              .number("y_max", cfg.grid.y_max)
                              .number("h", cfg.grid.h)
                              .integer("sectors", cfg.grid.sector_order));
  readers.emplace("profiles", ElementReader("profiles")
                                  .number("z_min", cfg.profiles.z_min)
                                  .number("z_max", cfg.profiles.z_max)
                                  .number("z_climb_to_max", cfg.profiles.z_climb_to_max)
                                  .number("d_min_range", cfg.profiles.d_min_range)
                                  .integer("n_climb_levels", cfg.profiles.n_climb_levels)
                                  .integer("n_dive_levels", cfg.profiles.n_dive_levels));
  readers.emplace("start",
                  ElementReader("start").number("x", cfg.start_x).number("y", cfg.start_y));
  readers.emplace("goal", ElementReader("goal").number("x", cfg.goal_x).number("y", cfg.goal_y));
  readers.emplace("search",
                  ElementReader("search").number("t0", cfg.t0).flag("fifo_check", cfg.fifo_check));

  long poll_ms = cfg.engine.sleep_poll_interval.count();
  readers.emplace("engine", ElementReader("engine")
                                .text("mode",
                                      [&](const std::string& v) {
                                        if (v == "serial") {
                                          cfg.mode = ExecutionMode::Serial;
                                        } else if (v == "parallel") {
                                          cfg.mode = ExecutionMode::Parallel;
                                        } else {
                                          throw ValidationError("engine.mode",
                                                                "expected serial or parallel");
                                        }
                                      })
                                .integer("workers", cfg.engine.n_workers)
                                .integer("sleep_poll_ms", poll_ms)
                                .flag("auto_sleep", cfg.engine.auto_sleep));

  std::set<std::string> seen;
  for (const auto& [key, child] : root) {
    if (key == "<xmlcomment>") continue;
    if (key == kAttr) throw ValidationError("mission", "root element takes no attributes");
    auto it = readers.find(key);
    if (it == readers.end()) throw ValidationError(key, "unknown element");
    if (!seen.insert(key).second) throw ValidationError(key, "element appears more than once");
    it->second.read(child);
  }
  cfg.engine.sleep_poll_interval = std::chrono::milliseconds(poll_ms);
  cfg.validate();
  return cfg;
}

pt::ptree read_tree(std::istream& is, const std::string& what) {
  pt::ptree doc;
  try {
    pt::read_xml(is, doc, pt::xml_parser::trim_whitespace);
  } catch (const pt::xml_parser_error& e) {
    throw ValidationError(what, std::string("malformed XML: ") + e.message());
  }
  return doc;
}

void write_tree(const pt::ptree& doc, std::ostream& os) {
  pt::write_xml(os, doc, pt::xml_writer_make_settings<std::string>(' ', 2));
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void MissionConfig::validate() const {
  environment.validate();
  vehicle.validate();
  integration.validate();
  grid.validate();
  profiles.validate();
  engine.validate();
  if (!std::isfinite(t0)) throw ValidationError("search.t0", "must be finite");
  auto inside = [&](double x, double y) {
    return x >= grid.x_min && x <= grid.x_max && y >= grid.y_min && y <= grid.y_max;
  };
  if (!inside(start_x, start_y)) throw ValidationError("start", "outside the grid box");
  if (!inside(goal_x, goal_y)) throw ValidationError("goal", "outside the grid box");
}

MissionConfig parse_mission(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("mission", "cannot open " + path.string());
  return mission_from_tree(read_tree(in, "mission"));
}

MissionConfig parse_mission_string(const std::string& xml) {
  std::istringstream in(xml);
  return mission_from_tree(read_tree(in, "mission"));
}

void write_mission(const MissionConfig& cfg, std::ostream& os) {
  pt::ptree doc;
  pt::ptree& root = doc.add_child("mission", pt::ptree());
  auto element = [&](const std::string& name,
                     std::initializer_list<std::pair<const char*, std::string>> attrs) {
    pt::ptree& e = root.add_child(name, pt::ptree());
    for (const auto& [k, v] : attrs) e.put(std::string(kAttr) + "." + k, v);
  };
  const FlowEnvironment& env = cfg.environment;
  const auto f = format_double;
  element("environment", {{"mode", to_string(env.mode)},
                          {"uniform_u", f(env.uniform_u)},
                          {"uniform_v", f(env.uniform_v)}});
  element("jet", {{"B0", f(env.jet.B0)}, {"epsilon", f(env.jet.epsilon)},
                  {"omega", f(env.jet.omega)}, {"theta", f(env.jet.theta)},
                  {"k", f(env.jet.k)}, {"c", f(env.jet.c)}});
  element("surface", {{"W0", f(env.surface.W0)}, {"d", f(env.surface.d)},
                      {"z_decay", f(env.surface.z_decay)}});
  element("vehicle", {{"v_bf", f(cfg.vehicle.v_bf)}, {"w_vert", f(cfg.vehicle.w_vert)}});
  element("integration", {{"dt", f(cfg.integration.dt)},
                          {"max_steps", std::to_string(cfg.integration.max_steps)},
                          {"eps_speed", f(cfg.integration.eps_speed)}});
  element("grid", {{"x_min", f(cfg.grid.x_min)}, {"x_max", f(cfg.grid.x_max)},
                   {"y_min", f(cfg.grid.y_min)}, {"y_max", f(cfg.grid.y_max)},
                   {"h", f(cfg.grid.h)}, {"sectors", std::to_string(cfg.grid.sector_order)}});
  element("profiles", {{"z_min", f(cfg.profiles.z_min)},
                       {"z_max", f(cfg.profiles.z_max)},
                       {"z_climb_to_max", f(cfg.profiles.z_climb_to_max)},
                       {"d_min_range", f(cfg.profiles.d_min_range)},
                       {"n_climb_levels", std::to_string(cfg.profiles.n_climb_levels)},
                       {"n_dive_levels", std::to_string(cfg.profiles.n_dive_levels)}});
  element("start", {{"x", f(cfg.start_x)}, {"y", f(cfg.start_y)}});
  element("goal", {{"x", f(cfg.goal_x)}, {"y", f(cfg.goal_y)}});
  element("search", {{"t0", f(cfg.t0)}, {"fifo_check", cfg.fifo_check ? "true" : "false"}});
  element("engine", {{"mode", cfg.mode == ExecutionMode::Parallel ? "parallel" : "serial"},
                     {"workers", std::to_string(cfg.engine.n_workers)},
                     {"sleep_poll_ms", std::to_string(cfg.engine.sleep_poll_interval.count())},
                     {"auto_sleep", cfg.engine.auto_sleep ? "true" : "false"}});
  write_tree(doc, os);
}

Graph build_mission_graph(const MissionConfig& cfg) {
  Graph g = build_grid(cfg.grid);
  insert_terminal(g, cfg.start_x, cfg.start_y, TerminalRole::Start);
  insert_terminal(g, cfg.goal_x, cfg.goal_y, TerminalRole::Goal);
  return g;
}

void write_path_xml(const PathResult& path, const Graph& g,
                    std::span<const DiveProfile> profiles, std::ostream& os) {
  pt::ptree doc;
  pt::ptree& root = doc.add_child("path", pt::ptree());
  root.put("<xmlattr>.t0", format_double(path.t0));
  root.put("<xmlattr>.arrival", format_double(path.arrival));
  root.put("<xmlattr>.legs", path.legs.size());
  for (const PathLeg& leg : path.legs) {
    pt::ptree& e = root.add_child("leg", pt::ptree());
    const Node& a = g.node(leg.from);
    const Node& b = g.node(leg.to);
    e.put("<xmlattr>.from", leg.from);
    e.put("<xmlattr>.to", leg.to);
    e.put("<xmlattr>.departure", format_double(leg.departure));
    e.put("<xmlattr>.travel_time", format_double(leg.travel_time));
    e.put("<xmlattr>.profile", leg.profile_index);
    e.put("<xmlattr>.from_x", format_double(a.x));
    e.put("<xmlattr>.from_y", format_double(a.y));
    e.put("<xmlattr>.to_x", format_double(b.x));
    e.put("<xmlattr>.to_y", format_double(b.y));
    const DiveProfile& p = profiles[leg.profile_index];
    e.put("<xmlattr>.climb_to", format_double(p.z_climb_to));
    e.put("<xmlattr>.dive_to", format_double(p.z_dive_to));
  }
  write_tree(doc, os);
}

PathResult read_path_xml(std::istream& is) {
  const pt::ptree doc = read_tree(is, "path");
  const pt::ptree& root = doc.get_child("path");
  auto attr = [](const pt::ptree& node, const std::string& name) {
    auto v = node.get_optional<std::string>(std::string(kAttr) + "." + name);
    if (!v) throw ValidationError("path." + name, "missing attribute");
    return *v;
  };
  PathResult path;
  path.t0 = parse_double("path.t0", attr(root, "t0"));
  path.arrival = parse_double("path.arrival", attr(root, "arrival"));
  for (const auto& [key, e] : root) {
    if (key != "leg") continue;
    PathLeg leg;
    leg.from = parse_int<std::size_t>("leg.from", attr(e, "from"));
    leg.to = parse_int<std::size_t>("leg.to", attr(e, "to"));
    leg.departure = parse_double("leg.departure", attr(e, "departure"));
    leg.travel_time = parse_double("leg.travel_time", attr(e, "travel_time"));
    leg.profile_index = parse_int<std::size_t>("leg.profile", attr(e, "profile"));
    path.legs.push_back(leg);
  }
  return path;
}

void write_path_csv(const PathResult& path, const Graph& g, std::ostream& os) {
  os << "t,x,y\n";
  if (path.legs.empty()) return;
  const Node& first = g.node(path.legs.front().from);
  os << format_double(path.t0) << "," << format_double(first.x) << ","
     << format_double(first.y) << "\n";
  for (const PathLeg& leg : path.legs) {
    const Node& n = g.node(leg.to);
    os << format_double(leg.arrival()) << "," << format_double(n.x) << ","
       << format_double(n.y) << "\n";
  }
}

void write_profile_trace_csv(const PathResult& path, const Graph& g,
                             std::span<const DiveProfile> profiles, const MissionConfig& cfg,
                             std::ostream& os) {
  os << "leg,profile,t,s,x,y,z,u,v,g\n";
  for (std::size_t i = 0; i < path.legs.size(); ++i) {
    const PathLeg& leg = path.legs[i];
    EdgeId edge_id = g.edge_count();
    for (EdgeId e : g.out_edges(leg.from)) {
      if (g.edge(e).to == leg.to) edge_id = e;
    }
    if (edge_id == g.edge_count()) throw std::logic_error("path leg is not a graph edge");
    std::vector<TraceStep> steps;
    traverse_edge(g.geometry(edge_id), leg.departure, profiles[leg.profile_index],
                  cfg.environment, cfg.vehicle, cfg.integration, &steps);
    for (const TraceStep& s : steps) {
      os << i << "," << leg.profile_index << "," << format_double(s.t) << ","
         << format_double(s.s) << "," << format_double(s.x) << "," << format_double(s.y) << ","
         << format_double(s.z) << "," << format_double(s.u) << "," << format_double(s.v) << ","
         << format_double(s.g) << "\n";
    }
  }
}

}  // namespace glider
