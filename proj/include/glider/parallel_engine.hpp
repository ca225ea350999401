#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <memory>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "glider/channel.hpp"
#include "glider/glider_cost.hpp"

namespace glider {

struct EngineConfig {
  std::size_t n_workers = 1;
  std::chrono::milliseconds sleep_poll_interval{100};
  /// Workers begin ASLEEP instead of AWAKE.
  bool auto_sleep = false;

  void validate() const;
};

enum class WorkerState { Asleep, Awake, Busy };
const char* to_string(WorkerState s);

/// Fly one edge with one profile.
struct TraversalWork {
  EdgeGeometry edge;
  double t_start = 0.0;
  DiveProfile profile;
  FlowEnvironment env;
  VehicleParams vehicle;
  IntegrationParams integration;
  std::chrono::microseconds padding{0};  // extra sleep before evaluating
};

/// Benchmark payload: occupies the worker for a fixed wall-clock duration.
/// `fail` makes the worker report an evaluation failure instead.
struct SyntheticWork {
  std::chrono::microseconds duration{0};
  bool fail = false;
};

struct Task {
  std::size_t id = 0;
  std::variant<TraversalWork, SyntheticWork> work;
};

struct TaskResult {
  std::size_t task_id = 0;
  TravelTime travel_time;
  std::size_t worker_id = 0;
  std::chrono::nanoseconds wall{0};
};

class EngineError : public std::runtime_error {
public:
  EngineError(const std::string& what, std::vector<std::size_t> missing)
      : std::runtime_error(what), missing_(std::move(missing)) {}
  const std::vector<std::size_t>& missing_task_ids() const { return missing_; }

private:
  std::vector<std::size_t> missing_;
};

/// ceil(n_tasks / n_workers)
std::size_t rounds_required(std::size_t n_tasks, std::size_t n_workers);

/// Master side of a master/worker pool. Every worker owns an inbox channel;
/// all workers answer on one shared outbox. Only value messages cross the
/// boundary. An ASLEEP worker checks its inbox once per sleep_poll_interval;
/// an AWAKE worker blocks on it. Not thread-safe: drive it from one thread.
class WorkerPool {
public:
  explicit WorkerPool(const EngineConfig& cfg);
  ~WorkerPool();
  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  std::size_t size() const { return workers_.size(); }
  const EngineConfig& config() const { return cfg_; }

  /// Puts every worker to sleep. Returns once all have acknowledged.
  void sleep_all();
  /// Wakes workers 0 .. min(k, size())-1. Returns once all have acknowledged,
  /// which for sleeping workers takes up to one poll interval.
  void wake(std::size_t k);
  std::vector<WorkerState> states() const;

  /// Dispatches `tasks` in barrier-separated rounds of up to size() tasks;
  /// task i of a round goes to worker i. Results come back sorted by task id.
  /// Throws EngineError listing every task without a result if any worker
  /// reports a failure; later rounds are not dispatched.
  std::vector<TaskResult> delegate(std::span<const Task> tasks);

  /// Round-trip handshake with every worker.
  void ping_all();

  /// Stops and joins all workers. Idempotent; also run by the destructor.
  void shutdown();

private:
  struct SleepCmd {};
  struct WakeCmd {};
  struct PingCmd {};
  struct ShutdownCmd {};
  using Inbound = std::variant<Task, SleepCmd, WakeCmd, PingCmd, ShutdownCmd>;

  struct Ack {
    std::size_t worker_id = 0;
  };
  struct Failure {
    std::size_t task_id = 0;
    std::size_t worker_id = 0;
    std::string what;
  };
  using Outbound = std::variant<TaskResult, Ack, Failure>;

  struct Worker {
    std::size_t id = 0;
    Channel<Inbound> inbox;
    std::atomic<WorkerState> state{WorkerState::Awake};
    std::thread thread;
  };

  void run_worker(Worker& w);
  void broadcast_and_wait(std::size_t count, const Inbound& msg);

  EngineConfig cfg_;
  std::vector<std::unique_ptr<Worker>> workers_;
  Channel<Outbound> outbox_;
  bool running_ = false;
};

/// Evaluates a task payload in the calling thread.
TravelTime run_task(const Task& task);

/// Fans each edge's profile set out over a pool, one task per profile.
class PoolEvaluator final : public ProfileEvaluator {
public:
  explicit PoolEvaluator(WorkerPool& pool, std::chrono::microseconds task_padding = {})
      : pool_(pool), padding_(task_padding) {}
  std::vector<TravelTime> evaluate(const EdgeGeometry& edge, double t_start,
                                   std::span<const DiveProfile> profiles,
                                   const FlowEnvironment& env, const VehicleParams& veh,
                                   const IntegrationParams& integ) override;

private:
  WorkerPool& pool_;
  std::chrono::microseconds padding_;
};

/// Start-up, handshake and tear-down durations of an otherwise idle pool.
struct NoopReport {
  std::size_t n_workers = 0;
  double startup_ms = 0.0;
  double handshake_ms = 0.0;
  double teardown_ms = 0.0;
};

NoopReport noop_run(const EngineConfig& cfg);

/// CSV rows (n_workers, phase, wall_ms), header first.
void write_noop_csv(std::span<const NoopReport> reports, std::ostream& os);

}  // namespace glider
