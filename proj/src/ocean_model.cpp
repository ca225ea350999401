#include "glider/ocean_model.hpp"

#include <algorithm>
#include <cmath>

#include "glider/errors.hpp"

namespace glider {

void JetParams::validate() const {
  if (!(B0 > 0.0)) throw ValidationError("jet.B0", "must be > 0");
  if (!(epsilon >= 0.0)) throw ValidationError("jet.epsilon", "must be >= 0");
  if (!(k > 0.0)) throw ValidationError("jet.k", "must be > 0");
  if (!std::isfinite(omega)) throw ValidationError("jet.omega", "must be finite");
  if (!std::isfinite(theta)) throw ValidationError("jet.theta", "must be finite");
  if (!std::isfinite(c)) throw ValidationError("jet.c", "must be finite");
}

void SurfaceCurrentParams::validate() const {
  if (!(z_decay > 0.0)) throw ValidationError("surface.z_decay", "must be > 0");
  if (!std::isfinite(W0)) throw ValidationError("surface.W0", "must be finite");
  if (!std::isfinite(d)) throw ValidationError("surface.d", "must be finite");
}

void FlowEnvironment::validate() const {
  jet.validate();
  surface.validate();
  if (!std::isfinite(uniform_u) || !std::isfinite(uniform_v)) {
    throw ValidationError("environment.uniform", "components must be finite");
  }
}

const char* to_string(FlowMode mode) {
  switch (mode) {
    case FlowMode::Full: return "full";
    case FlowMode::JetOnly: return "jet";
    case FlowMode::SurfaceOnly: return "surface";
    case FlowMode::Uniform: return "uniform";
    case FlowMode::StillWater: return "still";
  }
  return "unknown";
}

FlowMode flow_mode_from_string(const std::string& name) {
  for (FlowMode m : {FlowMode::Full, FlowMode::JetOnly, FlowMode::SurfaceOnly,
                     FlowMode::Uniform, FlowMode::StillWater}) {
    if (name == to_string(m)) return m;
  }
  throw ValidationError("environment.mode", "unknown mode '" + name + "'");
}

double meander_amplitude(double t, const JetParams& jet) {
  return jet.B0 + jet.epsilon * std::cos(jet.omega * t + jet.theta);
}

double stream_function(double x, double y, double t, const JetParams& jet) {
  const double B = meander_amplitude(t, jet);
  const double phase = jet.k * (x - jet.c * t);
  const double s = std::sin(phase);
  const double denom = std::sqrt(1.0 + jet.k * jet.k * B * B * s * s);
  return 1.0 - std::tanh((y - B * std::cos(phase)) / denom);
}

FlowSample jet_velocity(double x, double y, double t, const JetParams& jet) {
  // phi = 1 - tanh(eta), eta = Y / D with
  //   Y = y - B cos(xi), D = sqrt(1 + k^2 B^2 sin^2(xi)), xi = k (x - c t).
  const double B = meander_amplitude(t, jet);
  const double k = jet.k;
  const double xi = k * (x - jet.c * t);
  const double s = std::sin(xi);
  const double co = std::cos(xi);
  const double D = std::sqrt(1.0 + k * k * B * B * s * s);
  const double Y = y - B * co;
  const double eta = Y / D;

  const double ch = std::cosh(eta);
  const double sech2 = 1.0 / (ch * ch);

  // d(eta)/dx = k B sin(xi) / D - Y k^3 B^2 sin(xi) cos(xi) / D^3
  const double deta_dx = k * B * s / D - Y * k * k * k * B * B * s * co / (D * D * D);

  FlowSample out;
  out.u = sech2 / D;
  out.v = -sech2 * deta_dx;
  return out;
}

double surface_term(double z, double t, const SurfaceCurrentParams& surf, double omega) {
  if (z < 0.0) throw ValidationError("z", "depth must be >= 0");
  const double decay = std::max(1.0 - z / surf.z_decay, 0.0);
  return surf.W0 * std::cos(surf.d * omega * t) * decay;
}

FlowSample velocity(double x, double y, double z, double t, const FlowEnvironment& env) {
  if (z < 0.0) throw ValidationError("z", "depth must be >= 0");
  switch (env.mode) {
    case FlowMode::Full: {
      FlowSample s = jet_velocity(x, y, t, env.jet);
      s.u += surface_term(z, t, env.surface, env.jet.omega);
      return s;
    }
    case FlowMode::JetOnly:
      return jet_velocity(x, y, t, env.jet);
    case FlowMode::SurfaceOnly:
      return {surface_term(z, t, env.surface, env.jet.omega), 0.0};
    case FlowMode::Uniform:
      return {env.uniform_u, env.uniform_v};
    case FlowMode::StillWater:
      return {};
  }
  return {};
}

}  // namespace glider
