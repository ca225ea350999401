#pragma once

#include <numbers>
#include <string>

namespace glider {

/// Parameters of the meandering-jet stream function. Horizontal quantities
/// are dimensionless.
struct JetParams {
  double B0 = 1.2;       // mean meander amplitude
  double epsilon = 0.3;  // amplitude oscillation
  double omega = 0.4;    // angular frequency of the oscillation
  double theta = std::numbers::pi / 2.0;
  double k = 0.84;       // wavenumber
  double c = 0.12;       // phase speed

  void validate() const;
};

/// Wind-driven surface current. `z_decay` is a depth in meters below which
/// the term vanishes.
struct SurfaceCurrentParams {
  double W0 = 0.5;
  double d = 2.0;
  double z_decay = 15.0;

  void validate() const;
};

struct FlowSample {
  double u = 0.0;  // eastward
  double v = 0.0;  // northward
};

enum class FlowMode {
  Full,         // jet + surface term
  JetOnly,
  SurfaceOnly,
  Uniform,      // constant (ux, uy) everywhere
  StillWater,
};

struct FlowEnvironment {
  JetParams jet;
  SurfaceCurrentParams surface;
  FlowMode mode = FlowMode::Full;
  double uniform_u = 0.0;
  double uniform_v = 0.0;

  void validate() const;

  static FlowEnvironment still_water() {
    FlowEnvironment env;
    env.mode = FlowMode::StillWater;
    return env;
  }
  static FlowEnvironment uniform(double u, double v) {
    FlowEnvironment env;
    env.mode = FlowMode::Uniform;
    env.uniform_u = u;
    env.uniform_v = v;
    return env;
  }
};

const char* to_string(FlowMode mode);
FlowMode flow_mode_from_string(const std::string& name);

/// B(t) = B0 + epsilon * cos(omega * t + theta)
double meander_amplitude(double t, const JetParams& jet);

double stream_function(double x, double y, double t, const JetParams& jet);

/// u = -d(phi)/dy, v = d(phi)/dx, evaluated in closed form.
FlowSample jet_velocity(double x, double y, double t, const JetParams& jet);

/// Eastward surface contribution at depth z (meters, positive down). Throws
/// ValidationError for negative depth.
double surface_term(double z, double t, const SurfaceCurrentParams& surf, double omega);

/// Composite current at (x, y) and depth z for the environment's mode.
FlowSample velocity(double x, double y, double z, double t, const FlowEnvironment& env);

}  // namespace glider
