#include "glider/commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "glider/errors.hpp"

namespace glider {

namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

PlanRun run_plan(const MissionConfig& cfg, ExecutionMode mode, std::size_t n_workers,
                 std::chrono::microseconds task_padding) {
  cfg.validate();
  const auto begin = Clock::now();

  std::optional<WorkerPool> pool;
  if (mode == ExecutionMode::Parallel) {
    EngineConfig engine = cfg.engine;
    engine.n_workers = n_workers;
    pool.emplace(engine);
    pool->sleep_all();
  }

  Graph graph = build_mission_graph(cfg);
  std::vector<DiveProfile> profiles = generate_dive_profiles(cfg.profiles);
  const PlanInputs inputs{profiles, cfg.environment, cfg.vehicle, cfg.integration};
  SearchOptions options;
  options.fifo_check = cfg.fifo_check;

  SearchStats stats;
  PathResult path;
  Clock::time_point search_begin;
  Clock::time_point search_end;
  if (pool) {
    pool->wake(profiles.size());
    PoolEvaluator evaluator(*pool, task_padding);
    search_begin = Clock::now();
    try {
      path = plan(graph, cfg.t0, inputs, evaluator, options, &stats);
    } catch (...) {
      pool->shutdown();
      throw;
    }
    search_end = Clock::now();
    pool->sleep_all();
    pool->shutdown();
  } else {
    SerialEvaluator evaluator(task_padding);
    search_begin = Clock::now();
    path = plan(graph, cfg.t0, inputs, evaluator, options, &stats);
    search_end = Clock::now();
  }

  return PlanRun{std::move(graph),
                 std::move(profiles),
                 std::move(path),
                 stats,
                 ms_between(begin, Clock::now()),
                 ms_between(search_begin, search_end)};
}

int cmd_plan(const MissionConfig& cfg, ExecutionMode mode, std::size_t n_workers,
             const std::filesystem::path& out_dir, std::ostream& log) {
  std::optional<PlanRun> run;
  try {
    run.emplace(run_plan(cfg, mode, n_workers));
  } catch (const NoPathError& e) {
    log << "no path: " << e.what() << "\n";
    return kExitNoPath;
  }

  std::filesystem::create_directories(out_dir);
  {
    auto out = open_output(out_dir / "path.xml");
    write_path_xml(run->path, run->graph, run->profiles, out);
  }
  {
    auto out = open_output(out_dir / "path.csv");
    write_path_csv(run->path, run->graph, out);
  }
  {
    auto out = open_output(out_dir / "profile_trace.csv");
    write_profile_trace_csv(run->path, run->graph, run->profiles, cfg, out);
  }

  log << "legs=" << run->path.legs.size() << " arrival=" << format_double(run->path.arrival)
      << " settled=" << run->stats.settled
      << " edge_evaluations=" << run->stats.edge_evaluations;
  if (cfg.fifo_check) log << " fifo_violations=" << run->stats.fifo_violations;
  log << " search_ms=" << run->search_ms << "\n";
  return kExitOk;
}

std::vector<BenchRow> cmd_bench(const MissionConfig& cfg, const BenchOptions& options) {
  if (options.repeat < 1) throw ValidationError("repeat", "must be >= 1");
  auto measure = [&](ExecutionMode mode, std::size_t workers) {
    std::vector<double> total;
    std::vector<double> search;
    for (int r = 0; r < options.repeat; ++r) {
      PlanRun run = run_plan(cfg, mode, workers, options.task_padding);
      total.push_back(run.total_ms);
      search.push_back(run.search_ms);
    }
    return std::pair{median(total), median(search)};
  };

  std::vector<BenchRow> rows;
  const auto [serial_total, serial_search] = measure(ExecutionMode::Serial, 1);
  rows.push_back({"S-TVE", 1, serial_total, serial_search, 1.0});

  for (std::size_t k : options.workers) {
    const auto [total, search] = measure(ExecutionMode::Parallel, k);
    rows.push_back({"P-TVE", k, total, search, serial_search / search});
  }
  if (options.include_noop) {
    for (const NoopReport& r :
         cmd_noop(options.workers, cfg.engine.sleep_poll_interval, options.repeat)) {
      rows.push_back({"NOOP", r.n_workers, r.startup_ms + r.handshake_ms + r.teardown_ms, 0.0,
                      std::nullopt});
    }
  }
  return rows;
}

void write_bench_csv(std::span<const BenchRow> rows, std::ostream& os) {
  os << "variant,n_workers,total_ms,search_ms,speedup\n";
  for (const BenchRow& r : rows) {
    os << r.variant << "," << r.n_workers << "," << format_double(r.total_ms) << ","
       << format_double(r.search_ms) << ",";
    if (r.speedup) os << format_double(*r.speedup);
    os << "\n";
  }
}

std::vector<NoopReport> cmd_noop(std::span<const std::size_t> workers,
                                 std::chrono::milliseconds sleep_poll_interval, int repeat) {
  if (repeat < 1) throw ValidationError("repeat", "must be >= 1");
  std::vector<NoopReport> out;
  for (std::size_t k : workers) {
    EngineConfig cfg;
    cfg.n_workers = k;
    cfg.sleep_poll_interval = sleep_poll_interval;
    std::vector<double> startup, handshake, teardown;
    for (int r = 0; r < repeat; ++r) {
      const NoopReport rep = noop_run(cfg);
      startup.push_back(rep.startup_ms);
      handshake.push_back(rep.handshake_ms);
      teardown.push_back(rep.teardown_ms);
    }
    out.push_back({k, median(startup), median(handshake), median(teardown)});
  }
  return out;
}

void cmd_field(const MissionConfig& cfg, std::size_t nx, std::size_t ny, double z,
               std::span<const double> times, std::ostream& os) {
  if (nx < 1 || ny < 1) throw ValidationError("field", "lattice needs at least one point per axis");
  const GridSpec& box = cfg.grid;
  auto coord = [](double lo, double hi, std::size_t i, std::size_t n) {
    return n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  os << "t,x,y,z,u,v\n";
  for (double t : times) {
    for (std::size_t j = 0; j < ny; ++j) {
      for (std::size_t i = 0; i < nx; ++i) {
        const double x = coord(box.x_min, box.x_max, i, nx);
        const double y = coord(box.y_min, box.y_max, j, ny);
        const FlowSample s = velocity(x, y, z, t, cfg.environment);
        os << format_double(t) << "," << format_double(x) << "," << format_double(y) << ","
           << format_double(z) << "," << format_double(s.u) << "," << format_double(s.v) << "\n";
      }
    }
  }
}

void cmd_profiles(const MissionConfig& cfg, std::ostream& os) {
  os << "index,z_climb_to,z_dive_to\n";
  for (const DiveProfile& p : generate_dive_profiles(cfg.profiles)) {
    os << p.index << "," << format_double(p.z_climb_to) << "," << format_double(p.z_dive_to)
       << "\n";
  }
}

namespace {

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::size_t to_count(const std::string& field, const std::string& s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
    throw ValidationError(field, "expected a positive integer, got '" + s + "'");
  }
  return v;
}

}  // namespace

std::vector<std::size_t> parse_worker_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (const std::string& part : split(text)) {
    const auto dash = part.find('-');
    if (dash == std::string::npos) {
      out.push_back(to_count("workers", part));
      continue;
    }
    const std::size_t lo = to_count("workers", part.substr(0, dash));
    const std::size_t hi = to_count("workers", part.substr(dash + 1));
    if (hi < lo) throw ValidationError("workers", "empty range '" + part + "'");
    for (std::size_t k = lo; k <= hi; ++k) out.push_back(k);
  }
  if (out.empty()) throw ValidationError("workers", "empty worker list");
  return out;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& part : split(text)) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw ValidationError("times", "expected a number, got '" + part + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError("times", "empty list");
  return out;
}

}  // namespace glider
