#include "glider/glider_cost.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "glider/errors.hpp"

namespace glider {

void VehicleParams::validate() const {
  if (!(v_bf > 0.0) || !std::isfinite(v_bf)) throw ValidationError("vehicle.v_bf", "must be > 0");
  if (!(w_vert > 0.0) || !std::isfinite(w_vert)) {
    throw ValidationError("vehicle.w_vert", "must be > 0");
  }
}

void IntegrationParams::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ValidationError("integration.dt", "must be > 0");
  if (max_steps == 0) throw ValidationError("integration.max_steps", "must be > 0");
  if (!(eps_speed >= 0.0)) throw ValidationError("integration.eps_speed", "must be >= 0");
}

double sawtooth_depth(double t_rel, const DiveProfile& profile, double w_vert) {
  const double amplitude = profile.z_dive_to - profile.z_climb_to;
  const double half_period = amplitude / w_vert;
  const double phase = std::fmod(t_rel, 2.0 * half_period);
  if (phase <= half_period) {
    return std::min(profile.z_climb_to + w_vert * phase, profile.z_dive_to);
  }
  return std::max(profile.z_dive_to - w_vert * (phase - half_period), profile.z_climb_to);
}

TravelTime traverse_edge(const EdgeGeometry& edge, double t_start, const DiveProfile& profile,
                         const FlowEnvironment& env, const VehicleParams& veh,
                         const IntegrationParams& integ, std::vector<TraceStep>* trace) {
  const double v2 = veh.v_bf * veh.v_bf;
  double s = 0.0;
  double elapsed = 0.0;

  for (std::size_t step = 0; step < integ.max_steps; ++step) {
    const double x = edge.x0 + s * edge.dir_x;
    const double y = edge.y0 + s * edge.dir_y;
    const double z = sawtooth_depth(elapsed, profile, veh.w_vert);
    const double t = t_start + elapsed;
    const FlowSample c = velocity(x, y, z, t, env);

    const double c_par = c.u * edge.dir_x + c.v * edge.dir_y;
    const double c_perp = c.v * edge.dir_x - c.u * edge.dir_y;
    if (std::abs(c_perp) >= veh.v_bf) return std::nullopt;
    const double g = c_par + std::sqrt(v2 - c_perp * c_perp);
    if (!(g > integ.eps_speed)) return std::nullopt;

    if (trace) trace->push_back({t, s, x, y, z, c.u, c.v, g});

    const double remaining = edge.length - s;
    if (g * integ.dt >= remaining) return elapsed + remaining / g;
    s += g * integ.dt;
    elapsed += integ.dt;
  }
  return std::nullopt;
}

std::vector<TravelTime> SerialEvaluator::evaluate(const EdgeGeometry& edge, double t_start,
                                                  std::span<const DiveProfile> profiles,
                                                  const FlowEnvironment& env,
                                                  const VehicleParams& veh,
                                                  const IntegrationParams& integ) {
  std::vector<TravelTime> times;
  times.reserve(profiles.size());
  for (const DiveProfile& p : profiles) {
    if (padding_.count() > 0) std::this_thread::sleep_for(padding_);
    times.push_back(traverse_edge(edge, t_start, p, env, veh, integ));
  }
  return times;
}

EdgeCostResult reduce_profile_times(std::vector<TravelTime> times) {
  EdgeCostResult result;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] && (!result.best_time || *times[i] < *result.best_time)) {
      result.best_time = times[i];
      result.best_profile_index = i;
    }
  }
  result.per_profile_times = std::move(times);
  return result;
}

EdgeCostResult edge_cost(const EdgeGeometry& edge, double t_start,
                         std::span<const DiveProfile> profiles, const FlowEnvironment& env,
                         const VehicleParams& veh, const IntegrationParams& integ,
                         ProfileEvaluator& evaluator) {
  if (profiles.empty()) throw ValidationError("profiles", "edge_cost needs at least one profile");
  auto times = evaluator.evaluate(edge, t_start, profiles, env, veh, integ);
  if (times.size() != profiles.size()) {
    throw std::logic_error("evaluator returned a misaligned result set");
  }
  return reduce_profile_times(std::move(times));
}

}  // namespace glider
