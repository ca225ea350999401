#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "glider/mission.hpp"

namespace glider {

enum ExitCode : int {
  kExitOk = 0,
  kExitNoPath = 2,
  kExitConfigError = 3,
  kExitRuntimeError = 4,
};

struct PlanRun {
  Graph graph;
  std::vector<DiveProfile> profiles;
  PathResult path;
  SearchStats stats;
  double total_ms = 0.0;   // pool start-up, graph construction, search, tear-down
  double search_ms = 0.0;  // search only
};

/// Runs one mission. Serial runs evaluate profiles in the calling thread
/// (S-TVE); parallel runs start a pool of `n_workers`, put it to sleep during
/// graph construction, wake as many workers as there are profiles for the
/// search and tear the pool down afterwards (P-TVE). Throws NoPathError.
PlanRun run_plan(const MissionConfig& cfg, ExecutionMode mode, std::size_t n_workers,
                 std::chrono::microseconds task_padding = {});

/// `plan` command: writes path.xml, path.csv and profile_trace.csv to
/// `out_dir`. Returns kExitOk or kExitNoPath.
int cmd_plan(const MissionConfig& cfg, ExecutionMode mode, std::size_t n_workers,
             const std::filesystem::path& out_dir, std::ostream& log);

struct BenchRow {
  std::string variant;  // S-TVE, P-TVE or NOOP
  std::size_t n_workers = 0;
  double total_ms = 0.0;
  double search_ms = 0.0;
  std::optional<double> speedup;  // serial search / this search; empty for NOOP
};

struct BenchOptions {
  std::vector<std::size_t> workers;
  int repeat = 3;
  std::chrono::microseconds task_padding{0};
  bool include_noop = true;
};

/// One S-TVE row, then one P-TVE row (and optionally one NOOP row) per worker
/// count. Times are medians over `repeat` runs.
std::vector<BenchRow> cmd_bench(const MissionConfig& cfg, const BenchOptions& options);
void write_bench_csv(std::span<const BenchRow> rows, std::ostream& os);

/// Median start-up/handshake/tear-down times per worker count.
std::vector<NoopReport> cmd_noop(std::span<const std::size_t> workers,
                                 std::chrono::milliseconds sleep_poll_interval, int repeat);

/// CSV (t, x, y, z, u, v) on an nx-by-ny lattice spanning the mission box,
/// for every requested time.
void cmd_field(const MissionConfig& cfg, std::size_t nx, std::size_t ny, double z,
               std::span<const double> times, std::ostream& os);

/// CSV (index, z_climb_to, z_dive_to).
void cmd_profiles(const MissionConfig& cfg, std::ostream& os);

/// Comma-separated list; "a-b" expands to an inclusive range.
std::vector<std::size_t> parse_worker_list(const std::string& text);
std::vector<double> parse_number_list(const std::string& text);

}  // namespace glider
