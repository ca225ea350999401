// Command-line front end: plan, bench, noop, field, profiles, graph, oracle.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "glider/commands.hpp"
#include "glider/errors.hpp"
#include "glider/random_instances.hpp"

namespace {

glider::MissionConfig load(const std::string& path) {
  if (path.empty()) return glider::MissionConfig{};
  return glider::parse_mission(path);
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  body(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-varying-environment path planner for underwater gliders"};
  app.require_subcommand(1);

  std::string mission;
  std::string workers = "1";
  std::string out = "-";
  std::string out_dir = "out";
  int repeat = 3;
  bool serial = false;
  bool parallel = false;
  long padding_us = 0;
  std::uint64_t seed = 1;
  std::size_t instances = 100;
  std::size_t nx = 41;
  std::size_t ny = 26;
  double depth = 0.0;
  std::string times = "0";
  long poll_ms = 100;

  auto add_mission = [&](CLI::App* cmd) {
    cmd->add_option("--mission", mission, "mission XML file (defaults when omitted)");
  };

  auto* plan = app.add_subcommand("plan", "plan a path and write path.xml / CSV traces");
  add_mission(plan);
  auto* serial_flag = plan->add_flag("--serial", serial, "evaluate profiles in the master (S-TVE)");
  plan->add_flag("--parallel", parallel, "evaluate profiles on a worker pool (P-TVE)")
      ->excludes(serial_flag);
  plan->add_option("--workers", workers, "worker count for --parallel");
  plan->add_option("--out", out_dir, "output directory");

  auto* bench = app.add_subcommand("bench", "S-TVE vs P-TVE timing table (CSV)");
  add_mission(bench);
  bench->add_option("--workers", workers, "worker counts, e.g. 1-24,47");
  bench->add_option("--repeat", repeat, "runs per row; medians are reported");
  bench->add_option("--task-delay-us", padding_us, "extra sleep per profile evaluation");
  bench->add_option("--out", out, "CSV file ('-' for stdout)");

  auto* noop = app.add_subcommand("noop", "worker-pool start-up/tear-down overhead (CSV)");
  noop->add_option("--workers", workers, "worker counts");
  noop->add_option("--repeat", repeat, "runs per count; medians are reported");
  noop->add_option("--sleep-poll-ms", poll_ms, "poll interval of sleeping workers");
  noop->add_option("--out", out, "CSV file ('-' for stdout)");

  auto* field = app.add_subcommand("field", "sample the current field (CSV)");
  add_mission(field);
  field->add_option("--nx", nx, "lattice points along x");
  field->add_option("--ny", ny, "lattice points along y");
  field->add_option("--z", depth, "depth in meters");
  field->add_option("--times", times, "comma-separated sample times");
  field->add_option("--out", out, "CSV file ('-' for stdout)");

  auto* profiles = app.add_subcommand("profiles", "dump the generated dive profiles (CSV)");
  add_mission(profiles);
  profiles->add_option("--out", out, "CSV file ('-' for stdout)");

  auto* graph = app.add_subcommand("graph", "grid graph statistics (CSV)");
  add_mission(graph);
  graph->add_option("--out", out, "CSV file ('-' for stdout)");

  auto* oracle = app.add_subcommand("oracle", "compare the planner with exhaustive search");
  oracle->add_option("--seed", seed, "random seed");
  oracle->add_option("--instances", instances, "number of random instances");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*plan) {
      glider::MissionConfig cfg = load(mission);
      glider::ExecutionMode mode = cfg.mode;
      if (serial) mode = glider::ExecutionMode::Serial;
      if (parallel) mode = glider::ExecutionMode::Parallel;
      std::size_t n = cfg.engine.n_workers;
      if (plan->count("--workers")) n = glider::parse_worker_list(workers).front();
      return glider::cmd_plan(cfg, mode, n, out_dir, std::cerr);
    }
    if (*bench) {
      glider::BenchOptions options;
      options.workers = glider::parse_worker_list(workers);
      options.repeat = repeat;
      options.task_padding = std::chrono::microseconds(padding_us);
      const auto rows = glider::cmd_bench(load(mission), options);
      with_output(out, [&](std::ostream& os) { glider::write_bench_csv(rows, os); });
    } else if (*noop) {
      const auto list = glider::parse_worker_list(workers);
      const auto reports = glider::cmd_noop(list, std::chrono::milliseconds(poll_ms), repeat);
      with_output(out, [&](std::ostream& os) { glider::write_noop_csv(reports, os); });
    } else if (*field) {
      const glider::MissionConfig cfg = load(mission);
      const auto list = glider::parse_number_list(times);
      with_output(out, [&](std::ostream& os) { glider::cmd_field(cfg, nx, ny, depth, list, os); });
    } else if (*profiles) {
      const glider::MissionConfig cfg = load(mission);
      with_output(out, [&](std::ostream& os) { glider::cmd_profiles(cfg, os); });
    } else if (*graph) {
      const glider::Graph g = glider::build_mission_graph(load(mission));
      with_output(out, [&](std::ostream& os) { glider::write_graph_stats_csv(g, os); });
    } else if (*oracle) {
      const auto r = glider::compare_with_oracle(seed, instances, 1e-9);
      std::cout << "instances=" << r.instances << " rejected=" << r.rejected
                << " unique=" << r.unique_optima << " time_mismatches=" << r.time_mismatches
                << " path_mismatches=" << r.path_mismatches
                << " max_time_error=" << r.max_time_error << "\n";
      return r.time_mismatches == 0 && r.path_mismatches == 0 ? glider::kExitOk
                                                              : glider::kExitRuntimeError;
    }
  } catch (const glider::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return glider::kExitConfigError;
  } catch (const glider::NoPathError& e) {
    std::cerr << "no path: " << e.what() << "\n";
    return glider::kExitNoPath;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return glider::kExitRuntimeError;
  }
  return glider::kExitOk;
}
