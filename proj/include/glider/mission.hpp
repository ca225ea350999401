#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "glider/dive_profiles.hpp"
#include "glider/glider_cost.hpp"
#include "glider/grid_graph.hpp"
#include "glider/ocean_model.hpp"
#include "glider/parallel_engine.hpp"
#include "glider/tve_search.hpp"

namespace glider {

enum class ExecutionMode { Serial, Parallel };

/// Everything needed to run one planning mission. Defaults reproduce the
/// reference test case (meandering jet with surface current, 20 dive profiles, 3-sector
/// grid of size 0.4).
struct MissionConfig {
  FlowEnvironment environment;
  VehicleParams vehicle;
  IntegrationParams integration;
  GridSpec grid;
  DiveProfileParams profiles;
  double start_x = 0.2;
  double start_y = 0.0;
  double goal_x = 7.8;
  double goal_y = 0.0;
  double t0 = 0.0;
  bool fifo_check = false;
  EngineConfig engine;
  ExecutionMode mode = ExecutionMode::Serial;

  void validate() const;
};

/// Reads and validates a mission document. Throws ValidationError naming the
/// offending element or attribute.
MissionConfig parse_mission(const std::filesystem::path& path);
MissionConfig parse_mission_string(const std::string& xml);

/// Writes a complete mission document with every parameter spelled out.
void write_mission(const MissionConfig& cfg, std::ostream& os);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// Grid plus start/goal terminals for a mission.
Graph build_mission_graph(const MissionConfig& cfg);

/// Path document: one <leg> per edge with node ids, times and chosen profile,
/// plus positions and turning depths for readability.
void write_path_xml(const PathResult& path, const Graph& g,
                    std::span<const DiveProfile> profiles, std::ostream& os);
PathResult read_path_xml(std::istream& is);

/// CSV (t, x, y): the start node at t0 then each node at its arrival time.
void write_path_csv(const PathResult& path, const Graph& g, std::ostream& os);

/// CSV (leg, profile, t, s, x, y, z, u, v, g): every integrator step of every
/// leg, re-flown with the leg's chosen profile.
void write_profile_trace_csv(const PathResult& path, const Graph& g,
                             std::span<const DiveProfile> profiles, const MissionConfig& cfg,
                             std::ostream& os);

}  // namespace glider
