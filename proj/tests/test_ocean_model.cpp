#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "glider/errors.hpp"
#include "glider/ocean_model.hpp"

using namespace glider;

namespace {

// Central-difference oracle on the stream function: u = -dphi/dy, v = dphi/dx.
FlowSample fd_velocity(double x, double y, double t, const JetParams& jet, double h) {
  const double dphi_dy =
      (stream_function(x, y + h, t, jet) - stream_function(x, y - h, t, jet)) / (2 * h);
  const double dphi_dx =
      (stream_function(x + h, y, t, jet) - stream_function(x - h, y, t, jet)) / (2 * h);
  return {-dphi_dy, dphi_dx};
}

double divergence(double x, double y, double z, double t, const FlowEnvironment& env, double h) {
  const double du_dx = (velocity(x + h, y, z, t, env).u - velocity(x - h, y, z, t, env).u) / (2 * h);
  const double dv_dy = (velocity(x, y + h, z, t, env).v - velocity(x, y - h, z, t, env).v) / (2 * h);
  return du_dx + dv_dy;
}

}  // namespace

TEST_CASE("meander amplitude at the phase extremes") {
  const JetParams jet;
  CHECK(meander_amplitude(0.0, jet) == doctest::Approx(1.2).epsilon(1e-15));
  // omega t + theta = 0 -> t = -theta / omega
  CHECK(meander_amplitude(-jet.theta / jet.omega, jet) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(meander_amplitude((std::numbers::pi - jet.theta) / jet.omega, jet) ==
        doctest::Approx(0.9).epsilon(1e-15));
}

TEST_CASE("stream function is 1 on the jet axis and saturates off it") {
  const JetParams jet;
  for (double t : {0.0, 1.3, 7.7}) {
    for (double x : {-2.0, 0.0, 0.5, 3.3}) {
      const double axis = meander_amplitude(t, jet) * std::cos(jet.k * (x - jet.c * t));
      CHECK(stream_function(x, axis, t, jet) == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
  CHECK(stream_function(0.3, 1e3, 0.0, jet) == 0.0);
  CHECK(stream_function(0.3, -1e3, 0.0, jet) == 2.0);
}

TEST_CASE("stream function is periodic in x with wavelength 2 pi / k") {
  const JetParams jet;
  const double L = 2 * std::numbers::pi / jet.k;
  for (double x : {0.0, 0.7, 2.9}) {
    CHECK(stream_function(x + L, 0.4, 1.1, jet) ==
          doctest::Approx(stream_function(x, 0.4, 1.1, jet)).epsilon(1e-12));
  }
}

TEST_CASE("jet velocity on the axis is 1/D eastward") {
  const JetParams jet;
  const double t = 2.0;
  const double x = 1.1;
  const double B = meander_amplitude(t, jet);
  const double xi = jet.k * (x - jet.c * t);
  const double y = B * std::cos(xi);
  const double s = std::sin(xi);
  const FlowSample f = jet_velocity(x, y, t, jet);
  CHECK(f.u == doctest::Approx(1.0 / std::sqrt(1 + jet.k * jet.k * B * B * s * s)).epsilon(1e-14));
  CHECK(f.u > 0.0);
}

TEST_CASE("analytic jet velocity matches central differences of the stream function") {
  const JetParams jet;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> X(-4.0, 12.0), Y(-3.0, 3.0), T(0.0, 60.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = X(rng), y = Y(rng), t = T(rng);
    const FlowSample a = jet_velocity(x, y, t, jet);
    const FlowSample fd = fd_velocity(x, y, t, jet, 1e-5);
    const double rel = std::hypot(a.u - fd.u, a.v - fd.v) / std::hypot(a.u, a.v);
    worst = std::max(worst, rel);
  }
  CHECK(worst < 1e-5);
}

TEST_CASE("v where sin(xi) = 0 on the axis matches the oracle") {
  // xi = 0 and y on the axis: both terms of d(eta)/dx vanish.
  const JetParams jet;
  const double t = 3.0;
  const double x = jet.c * t;
  const double y = meander_amplitude(t, jet);
  const FlowSample a = jet_velocity(x, y, t, jet);
  const FlowSample fd = fd_velocity(x, y, t, jet, 1e-5);
  CHECK(std::abs(a.v - fd.v) < 1e-9);
  CHECK(std::abs(a.u - fd.u) < 1e-9);
}

TEST_CASE("full field is divergence free") {
  FlowEnvironment env;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> X(-4.0, 12.0), Y(-3.0, 3.0), Z(0.0, 40.0), T(0.0, 60.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    worst = std::max(worst, std::abs(divergence(X(rng), Y(rng), Z(rng), T(rng), env, 1e-4)));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("velocity is periodic in x") {
  FlowEnvironment env;
  const double L = 2 * std::numbers::pi / env.jet.k;
  for (double x : {0.0, 1.7, 5.2}) {
    const FlowSample a = velocity(x, 0.3, 4.0, 2.5, env);
    const FlowSample b = velocity(x + L, 0.3, 4.0, 2.5, env);
    CHECK(a.u == doctest::Approx(b.u).epsilon(1e-12));
    CHECK(a.v == doctest::Approx(b.v).epsilon(1e-12));
  }
}

TEST_CASE("surface term decays linearly to zero at z_decay") {
  const SurfaceCurrentParams surf;
  const double omega = 0.4;
  CHECK(surface_term(15.0, 3.7, surf, omega) == 0.0);
  CHECK(surface_term(40.0, 3.7, surf, omega) == 0.0);
  CHECK(surface_term(0.0, 0.0, surf, omega) == 0.5);
  CHECK(surface_term(7.5, 0.0, surf, omega) == 0.25);
  // Sign follows cos(d omega t).
  const double t_adverse = std::numbers::pi / (surf.d * omega);
  CHECK(surface_term(0.0, t_adverse, surf, omega) == doctest::Approx(-0.5));
  CHECK_THROWS_AS(surface_term(-1.0, 0.0, surf, omega), ValidationError);
}

TEST_CASE("composite velocity") {
  FlowEnvironment env;
  FlowEnvironment jet_only = env;
  jet_only.mode = FlowMode::JetOnly;

  SUBCASE("below z_decay the field is the jet alone") {
    for (double z : {15.0, 20.0, 180.0}) {
      const FlowSample a = velocity(0.8, 0.2, z, 1.0, env);
      const FlowSample b = jet_velocity(0.8, 0.2, 1.0, env.jet);
      CHECK(a.u == b.u);
      CHECK(a.v == b.v);
    }
  }
  SUBCASE("v does not depend on depth") {
    const double v0 = velocity(0.8, 0.2, 0.0, 1.0, env).v;
    for (double z : {3.0, 11.0, 50.0}) CHECK(velocity(0.8, 0.2, z, 1.0, env).v == v0);
  }
  SUBCASE("test modes") {
    const FlowSample still = velocity(1, 2, 3, 4, FlowEnvironment::still_water());
    CHECK(still.u == 0.0);
    CHECK(still.v == 0.0);
    const FlowSample uni = velocity(1, 2, 3, 4, FlowEnvironment::uniform(0.1, -0.2));
    CHECK(uni.u == 0.1);
    CHECK(uni.v == -0.2);
    FlowEnvironment surf = env;
    surf.mode = FlowMode::SurfaceOnly;
    CHECK(velocity(5, 5, 0, 0, surf).u == 0.5);
    CHECK(velocity(5, 5, 0, 0, surf).v == 0.0);
  }
  SUBCASE("negative depth is rejected") {
    CHECK_THROWS_AS(velocity(0, 0, -0.1, 0, env), ValidationError);
  }
}

TEST_CASE("parameter validation") {
  JetParams jet;
  jet.B0 = 0.0;
  CHECK_THROWS_AS(jet.validate(), ValidationError);
  jet = {};
  jet.k = -1.0;
  CHECK_THROWS_AS(jet.validate(), ValidationError);
  SurfaceCurrentParams surf;
  surf.z_decay = 0.0;
  CHECK_THROWS_AS(surf.validate(), ValidationError);
  CHECK(flow_mode_from_string("surface") == FlowMode::SurfaceOnly);
  CHECK_THROWS_AS(flow_mode_from_string("tidal"), ValidationError);
}
