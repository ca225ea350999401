#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "glider/commands.hpp"
#include "glider/errors.hpp"

using namespace glider;
namespace fs = std::filesystem;

namespace {

const fs::path kMissions = fs::path(GLIDER_SOURCE_DIR) / "missions";

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("glider_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string field_of(const std::string& xml) {
  try {
    parse_mission_string(xml);
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "";
}

}  // namespace

TEST_CASE("shipped reference mission") {
  const MissionConfig cfg = parse_mission(kMissions / "reference.xml");
  CHECK(generate_dive_profiles(cfg.profiles).size() == 20);
  CHECK(cfg.environment.mode == FlowMode::Full);
  CHECK(cfg.environment.jet.theta == std::numbers::pi / 2);
  CHECK(cfg.grid.h == 0.4);
  CHECK(cfg.grid.sector_order == 3);
  CHECK(cfg.vehicle.v_bf == 0.5);
  CHECK(cfg.engine.sleep_poll_interval == std::chrono::milliseconds(100));
}

TEST_CASE("omitted elements take their defaults") {
  const MissionConfig cfg = parse_mission_string("<mission/>");
  const MissionConfig defaults;
  std::ostringstream a, b;
  write_mission(cfg, a);
  write_mission(defaults, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("write_mission output parses back to the same document") {
  MissionConfig cfg;
  cfg.environment.mode = FlowMode::Uniform;
  cfg.environment.uniform_u = 0.125;
  cfg.vehicle.w_vert = 37.5;
  cfg.profiles.n_dive_levels = 3;
  cfg.mode = ExecutionMode::Parallel;
  cfg.engine.n_workers = 7;
  cfg.fifo_check = true;
  std::ostringstream first;
  write_mission(cfg, first);
  std::ostringstream second;
  write_mission(parse_mission_string(first.str()), second);
  CHECK(first.str() == second.str());
}

TEST_CASE("malformed and invalid documents") {
  CHECK_THROWS_AS(parse_mission_string(""), ValidationError);
  CHECK(field_of("<mission><grid h=\"0.4\"></mission>") == "mission");
  CHECK(field_of("<other/>") == "mission");
  CHECK(field_of("<mission><profiles n_dive_levels=\"0\"/></mission>") == "profiles.n_dive_levels");
  CHECK(field_of("<mission><grid h=\"abc\"/></mission>") == "grid.h");
  CHECK(field_of("<mission><grid spacing=\"1\"/></mission>") == "grid.spacing");
  CHECK(field_of("<mission><tides/></mission>") == "tides");
  CHECK(field_of("<mission><grid/><grid/></mission>") == "grid");
  CHECK(field_of("<mission><environment mode=\"tidal\"/></mission>") == "environment.mode");
  CHECK(field_of("<mission><engine workers=\"0\"/></mission>") == "engine.workers");
  CHECK(field_of("<mission><start x=\"99\"/></mission>") == "start");
  CHECK(field_of("<mission><search fifo_check=\"maybe\"/></mission>") == "search.fifo_check");
  CHECK(field_of("<mission><surface z_decay=\"0\"/></mission>") == "surface.z_decay");
  CHECK_THROWS_AS(parse_mission(kMissions / "does_not_exist.xml"), ValidationError);
}

TEST_CASE("plan writes identical XML serially and in parallel") {
  const MissionConfig cfg = parse_mission(kMissions / "reference.xml");
  std::ostringstream log;
  const fs::path serial_dir = scratch("serial");
  const fs::path parallel_dir = scratch("parallel");
  REQUIRE(cmd_plan(cfg, ExecutionMode::Serial, 1, serial_dir, log) == kExitOk);
  REQUIRE(cmd_plan(cfg, ExecutionMode::Parallel, 20, parallel_dir, log) == kExitOk);
  const std::string xml = slurp(serial_dir / "path.xml");
  CHECK_FALSE(xml.empty());
  CHECK(xml == slurp(parallel_dir / "path.xml"));
  CHECK(slurp(serial_dir / "path.csv") == slurp(parallel_dir / "path.csv"));

  SUBCASE("path XML round trip") {
    std::ifstream in(serial_dir / "path.xml");
    const PathResult read = read_path_xml(in);
    const PlanRun run = run_plan(cfg, ExecutionMode::Serial, 1);
    CHECK(read == run.path);
  }
  SUBCASE("trace covers every leg") {
    const auto rows = read_csv(slurp(serial_dir / "profile_trace.csv"));
    REQUIRE(rows.size() > 1);
    CHECK(rows[0] == std::vector<std::string>{"leg", "profile", "t", "s", "x", "y", "z", "u", "v", "g"});
    const auto path_rows = read_csv(slurp(serial_dir / "path.csv"));
    CHECK(rows.back()[0] == std::to_string(path_rows.size() - 3));  // header + start row
  }
}

TEST_CASE("still-water toy mission follows the straight row") {
  const MissionConfig cfg = parse_mission(kMissions / "still_water.xml");
  const PlanRun run = run_plan(cfg, ExecutionMode::Serial, 1);
  for (const PathLeg& leg : run.path.legs) {
    CHECK(run.graph.node(leg.from).y == 0.5);
    CHECK(run.graph.node(leg.to).y == 0.5);
  }
  CHECK(std::abs(run.path.total_time() - 2.0 / 0.5) <= run.path.legs.size() * cfg.integration.dt);
}

TEST_CASE("unreachable goal gives the no-path exit code") {
  const MissionConfig cfg = parse_mission(kMissions / "unreachable.xml");
  std::ostringstream log;
  CHECK(cmd_plan(cfg, ExecutionMode::Serial, 1, scratch("none"), log) == kExitNoPath);
  CHECK(cmd_plan(cfg, ExecutionMode::Parallel, 3, scratch("none_p"), log) == kExitNoPath);
}

TEST_CASE("bench report") {
  const MissionConfig cfg = parse_mission(kMissions / "still_water.xml");
  BenchOptions options;
  options.workers = {1, 2, 4};
  options.repeat = 1;
  const auto rows = cmd_bench(cfg, options);
  REQUIRE(rows.size() == 1 + 3 + 3);
  CHECK(rows[0].variant == "S-TVE");
  CHECK(rows[0].n_workers == 1);
  CHECK(rows[0].speedup == 1.0);

  std::ostringstream os;
  write_bench_csv(rows, os);
  const auto csv = read_csv(os.str());
  REQUIRE(csv.size() == rows.size() + 1);
  CHECK(csv[0] == std::vector<std::string>{"variant", "n_workers", "total_ms", "search_ms", "speedup"});
  const double serial_search = std::stod(csv[1][3]);
  for (std::size_t i = 1; i < csv.size(); ++i) {
    if (csv[i][0] == "NOOP") {
      CHECK(csv[i][4].empty());
      continue;
    }
    // The speedup column recomputes exactly from the time columns.
    CHECK(std::stod(csv[i][4]) == serial_search / std::stod(csv[i][3]));
  }
  CHECK(csv[2][0] == "P-TVE");
  CHECK(csv[5][0] == "NOOP");
}

TEST_CASE("noop medians are stable across repeats") {
  const std::vector<std::size_t> workers{8};
  std::vector<double> totals;
  for (int i = 0; i < 3; ++i) {
    const NoopReport r = cmd_noop(workers, std::chrono::milliseconds(100), 5).front();
    totals.push_back(r.startup_ms + r.handshake_ms + r.teardown_ms);
  }
  const auto [lo, hi] = std::minmax_element(totals.begin(), totals.end());
  MESSAGE("noop totals (ms): " << totals[0] << " " << totals[1] << " " << totals[2]);
  CHECK((*hi - *lo) / *hi < 0.5);
}

TEST_CASE("field samples") {
  MissionConfig cfg;
  std::ostringstream os;
  const std::vector<double> times{0.0, 1.0, 2.5};
  cmd_field(cfg, 5, 4, 0.0, times, os);
  const auto rows = read_csv(os.str());
  CHECK(rows.size() == 1 + 5 * 4 * 3);
  CHECK(rows[0] == std::vector<std::string>{"t", "x", "y", "z", "u", "v"});

  // At t = 0, cos(d omega t) = 1: surface adds +0.5 to u.
  const double x = std::stod(rows[1][1]), y = std::stod(rows[1][2]);
  CHECK(std::stod(rows[1][4]) ==
        doctest::Approx(jet_velocity(x, y, 0.0, cfg.environment.jet).u + 0.5).epsilon(1e-15));

  std::ostringstream deep, jet;
  cmd_field(cfg, 5, 4, 20.0, times, deep);
  MissionConfig jet_only = cfg;
  jet_only.environment.mode = FlowMode::JetOnly;
  cmd_field(jet_only, 5, 4, 20.0, times, jet);
  CHECK(deep.str() == jet.str());
}

TEST_CASE("profiles dump") {
  MissionConfig cfg;
  std::ostringstream os;
  cmd_profiles(cfg, os);
  const auto rows = read_csv(os.str());
  CHECK(rows.size() == 21);
  CHECK(rows[12] == std::vector<std::string>{"11", "26.666666666666668", "200"});

  cfg.profiles.n_climb_levels = 1;
  cfg.profiles.n_dive_levels = 1;
  std::ostringstream one;
  cmd_profiles(cfg, one);
  CHECK(read_csv(one.str()).size() == 2);

  cfg.profiles.n_dive_levels = 0;
  std::ostringstream bad;
  CHECK_THROWS_AS(cmd_profiles(cfg, bad), ValidationError);
}

TEST_CASE("list parsing") {
  CHECK(parse_worker_list("1-3,8") == std::vector<std::size_t>{1, 2, 3, 8});
  CHECK_THROWS_AS(parse_worker_list("0"), ValidationError);
  CHECK_THROWS_AS(parse_worker_list("4-2"), ValidationError);
  CHECK_THROWS_AS(parse_worker_list(""), ValidationError);
  CHECK(parse_number_list("0,2.5,-1") == std::vector<double>{0.0, 2.5, -1.0});
  CHECK_THROWS_AS(parse_number_list("x"), ValidationError);
}
