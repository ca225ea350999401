#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "glider/dive_profiles.hpp"
#include "glider/grid_graph.hpp"
#include "glider/ocean_model.hpp"

namespace glider {

struct VehicleParams {
  double v_bf = 0.5;      // body-fixed horizontal speed, dimensionless
  double w_vert = 100.0;  // vertical rate, m per unit time

  void validate() const;
};

struct IntegrationParams {
  double dt = 0.01;
  std::size_t max_steps = 1'000'000;
  double eps_speed = 1e-6;  // ground speeds at or below this are infeasible

  void validate() const;
};

/// Travel time, or nullopt when the edge cannot be flown.
using TravelTime = std::optional<double>;

struct EdgeCostResult {
  TravelTime best_time;
  std::size_t best_profile_index = 0;
  std::vector<TravelTime> per_profile_times;

  bool feasible() const { return best_time.has_value(); }
  friend bool operator==(const EdgeCostResult&, const EdgeCostResult&) = default;
};

/// Depth of a sawtooth that starts at z_climb_to heading down, turning at
/// z_dive_to, at t_rel time units after the start of the edge.
double sawtooth_depth(double t_rel, const DiveProfile& profile, double w_vert);

/// One row of a traversal trace.
struct TraceStep {
  double t = 0.0;
  double s = 0.0;  // along-track progress
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double u = 0.0;
  double v = 0.0;
  double g = 0.0;  // ground speed along the track
};

/// Flies `edge` starting at t_start while holding the track line: the cross
/// current is cancelled by crabbing and the along-track ground speed is
/// c_par + sqrt(v_bf^2 - c_perp^2). Fixed step dt with the last step cut to
/// land on the edge end. nullopt when the cross current reaches v_bf, the
/// ground speed drops to eps_speed, or max_steps runs out.
TravelTime traverse_edge(const EdgeGeometry& edge, double t_start, const DiveProfile& profile,
                         const FlowEnvironment& env, const VehicleParams& veh,
                         const IntegrationParams& integ,
                         std::vector<TraceStep>* trace = nullptr);

/// Strategy for computing per-profile travel times of one edge. Results are
/// aligned with `profiles`.
class ProfileEvaluator {
public:
  virtual ~ProfileEvaluator() = default;
  virtual std::vector<TravelTime> evaluate(const EdgeGeometry& edge, double t_start,
                                           std::span<const DiveProfile> profiles,
                                           const FlowEnvironment& env, const VehicleParams& veh,
                                           const IntegrationParams& integ) = 0;
};

/// Evaluates profiles one after another in the calling thread. A non-zero
/// `task_padding` adds a fixed sleep per profile (benchmark emulation of a
/// slower core).
class SerialEvaluator final : public ProfileEvaluator {
public:
  explicit SerialEvaluator(std::chrono::microseconds task_padding = {})
      : padding_(task_padding) {}
  std::vector<TravelTime> evaluate(const EdgeGeometry& edge, double t_start,
                                   std::span<const DiveProfile> profiles,
                                   const FlowEnvironment& env, const VehicleParams& veh,
                                   const IntegrationParams& integ) override;

private:
  std::chrono::microseconds padding_;
};

/// Lowest feasible time with lowest-index tie-break.
EdgeCostResult reduce_profile_times(std::vector<TravelTime> times);

EdgeCostResult edge_cost(const EdgeGeometry& edge, double t_start,
                         std::span<const DiveProfile> profiles, const FlowEnvironment& env,
                         const VehicleParams& veh, const IntegrationParams& integ,
                         ProfileEvaluator& evaluator);

}  // namespace glider
