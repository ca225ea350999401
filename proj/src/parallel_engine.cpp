#include "glider/parallel_engine.hpp"

#include <algorithm>
#include <iomanip>
#include <set>

#include "glider/errors.hpp"

namespace glider {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

void EngineConfig::validate() const {
  if (n_workers < 1) throw ValidationError("engine.workers", "must be >= 1");
  if (sleep_poll_interval.count() <= 0) {
    throw ValidationError("engine.sleep_poll_ms", "must be > 0");
  }
}

const char* to_string(WorkerState s) {
  switch (s) {
    case WorkerState::Asleep: return "asleep";
    case WorkerState::Awake: return "awake";
    case WorkerState::Busy: return "busy";
  }
  return "unknown";
}

std::size_t rounds_required(std::size_t n_tasks, std::size_t n_workers) {
  if (n_tasks < 1 || n_workers < 1) {
    throw std::invalid_argument("rounds_required needs n_tasks >= 1 and n_workers >= 1");
  }
  return (n_tasks + n_workers - 1) / n_workers;
}

TravelTime run_task(const Task& task) {
  return std::visit(
      Overloaded{
          [](const TraversalWork& w) -> TravelTime {
            if (w.padding.count() > 0) std::this_thread::sleep_for(w.padding);
            return traverse_edge(w.edge, w.t_start, w.profile, w.env, w.vehicle, w.integration);
          },
          [](const SyntheticWork& w) -> TravelTime {
            std::this_thread::sleep_for(w.duration);
            if (w.fail) throw std::runtime_error("synthetic task failure");
            return std::chrono::duration<double>(w.duration).count();
          }},
      task.work);
}

WorkerPool::WorkerPool(const EngineConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  workers_.reserve(cfg_.n_workers);
  try {
    for (std::size_t i = 0; i < cfg_.n_workers; ++i) {
      auto w = std::make_unique<Worker>();
      w->id = i;
      w->state = cfg_.auto_sleep ? WorkerState::Asleep : WorkerState::Awake;
      workers_.push_back(std::move(w));
    }
    running_ = true;
    for (auto& w : workers_) {
      Worker& ref = *w;
      ref.thread = std::thread([this, &ref] { run_worker(ref); });
    }
  } catch (const std::system_error& e) {
    shutdown();
    throw EngineError(std::string("worker start-up failed: ") + e.what(), {});
  }
}

WorkerPool::~WorkerPool() { shutdown(); }

void WorkerPool::run_worker(Worker& w) {
  for (;;) {
    std::optional<Inbound> msg;
    if (w.state.load() == WorkerState::Asleep) {
      msg = w.inbox.try_pop();
      if (!msg) {
        std::this_thread::sleep_for(cfg_.sleep_poll_interval);
        continue;
      }
    } else {
      msg = w.inbox.pop();
    }

    bool stop = false;
    std::visit(Overloaded{
                   [&](const Task& task) {
                     const WorkerState resting = w.state.load();
                     w.state = WorkerState::Busy;
                     const auto start = Clock::now();
                     try {
                       TravelTime t = run_task(task);
                       outbox_.push(TaskResult{task.id, t, w.id, Clock::now() - start});
                     } catch (const std::exception& e) {
                       outbox_.push(Failure{task.id, w.id, e.what()});
                     }
                     w.state = resting;
                   },
                   [&](const SleepCmd&) {
                     w.state = WorkerState::Asleep;
                     outbox_.push(Ack{w.id});
                   },
                   [&](const WakeCmd&) {
                     w.state = WorkerState::Awake;
                     outbox_.push(Ack{w.id});
                   },
                   [&](const PingCmd&) { outbox_.push(Ack{w.id}); },
                   [&](const ShutdownCmd&) { stop = true; },
               },
               *msg);
    if (stop) return;
  }
}

void WorkerPool::broadcast_and_wait(std::size_t count, const Inbound& msg) {
  count = std::min(count, workers_.size());
  for (std::size_t i = 0; i < count; ++i) workers_[i]->inbox.push(msg);
  for (std::size_t acked = 0; acked < count;) {
    Outbound reply = outbox_.pop();
    if (std::holds_alternative<Ack>(reply)) ++acked;
  }
}

void WorkerPool::sleep_all() { broadcast_and_wait(workers_.size(), SleepCmd{}); }

void WorkerPool::wake(std::size_t k) { broadcast_and_wait(k, WakeCmd{}); }

void WorkerPool::ping_all() { broadcast_and_wait(workers_.size(), PingCmd{}); }

std::vector<WorkerState> WorkerPool::states() const {
  std::vector<WorkerState> out;
  out.reserve(workers_.size());
  for (const auto& w : workers_) out.push_back(w->state.load());
  return out;
}

std::vector<TaskResult> WorkerPool::delegate(std::span<const Task> tasks) {
  if (tasks.empty()) throw std::invalid_argument("delegate needs at least one task");
  {
    std::set<std::size_t> ids;
    for (const Task& t : tasks) {
      if (!ids.insert(t.id).second) throw std::invalid_argument("duplicate task id");
    }
  }

  const std::size_t n = workers_.size();
  std::vector<TaskResult> results;
  results.reserve(tasks.size());
  std::vector<std::size_t> failed;
  std::string first_failure;

  std::size_t next = 0;
  while (next < tasks.size() && failed.empty()) {
    const std::size_t round_size = std::min(n, tasks.size() - next);
    for (std::size_t i = 0; i < round_size; ++i) workers_[i]->inbox.push(tasks[next + i]);
    for (std::size_t received = 0; received < round_size;) {
      Outbound reply = outbox_.pop();
      if (auto* r = std::get_if<TaskResult>(&reply)) {
        results.push_back(std::move(*r));
        ++received;
      } else if (auto* f = std::get_if<Failure>(&reply)) {
        if (failed.empty()) {
          first_failure = "worker " + std::to_string(f->worker_id) + ": " + f->what;
        }
        failed.push_back(f->task_id);
        ++received;
      }
    }
    next += round_size;
  }

  if (!failed.empty()) {
    std::vector<std::size_t> missing = failed;
    for (std::size_t i = next; i < tasks.size(); ++i) missing.push_back(tasks[i].id);
    std::sort(missing.begin(), missing.end());
    throw EngineError("task evaluation failed (" + first_failure + ")", std::move(missing));
  }

  std::sort(results.begin(), results.end(),
            [](const TaskResult& a, const TaskResult& b) { return a.task_id < b.task_id; });
  return results;
}

void WorkerPool::shutdown() {
  if (!running_) return;
  running_ = false;
  for (auto& w : workers_) w->inbox.push(ShutdownCmd{});
  for (auto& w : workers_) {
    if (w->thread.joinable()) w->thread.join();
  }
}

std::vector<TravelTime> PoolEvaluator::evaluate(const EdgeGeometry& edge, double t_start,
                                                std::span<const DiveProfile> profiles,
                                                const FlowEnvironment& env,
                                                const VehicleParams& veh,
                                                const IntegrationParams& integ) {
  std::vector<Task> tasks;
  tasks.reserve(profiles.size());
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    tasks.push_back({i, TraversalWork{edge, t_start, profiles[i], env, veh, integ, padding_}});
  }
  std::vector<TravelTime> times;
  times.reserve(profiles.size());
  for (TaskResult& r : pool_.delegate(tasks)) times.push_back(r.travel_time);
  return times;
}

NoopReport noop_run(const EngineConfig& cfg) {
  NoopReport report;
  report.n_workers = cfg.n_workers;
  auto t = Clock::now();
  WorkerPool pool(cfg);
  report.startup_ms = ms_since(t);

  t = Clock::now();
  pool.ping_all();
  report.handshake_ms = ms_since(t);

  t = Clock::now();
  pool.shutdown();
  report.teardown_ms = ms_since(t);
  return report;
}

void write_noop_csv(std::span<const NoopReport> reports, std::ostream& os) {
  os << "n_workers,phase,wall_ms\n";
  os << std::fixed << std::setprecision(3);
  for (const NoopReport& r : reports) {
    os << r.n_workers << ",startup," << r.startup_ms << "\n";
    os << r.n_workers << ",handshake," << r.handshake_ms << "\n";
    os << r.n_workers << ",teardown," << r.teardown_ms << "\n";
  }
  os.unsetf(std::ios::floatfield);
}

}  // namespace glider
