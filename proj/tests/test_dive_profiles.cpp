#include <doctest.h>

#include <random>

#include "glider/dive_profiles.hpp"
#include "glider/errors.hpp"

using namespace glider;

TEST_CASE("reference parameters give 20 profiles") {
  const DiveProfileParams p;  // 0, 200, 40, 50, 4, 6
  const auto profiles = generate_dive_profiles(p);
  REQUIRE(profiles.size() == 20);

  CHECK(climb_to_levels(p) == std::vector<double>{0.0, 40.0 / 3, 80.0 / 3, 40.0});
  CHECK(dive_to_levels(p) == std::vector<double>{200.0, 170.0, 140.0, 110.0, 80.0, 50.0});

  // Hand-evaluated exclusions: amplitude below 50 m.
  const std::vector<std::pair<double, double>> excluded = {
      {40.0 / 3, 50.0}, {80.0 / 3, 50.0}, {40.0, 50.0}, {40.0, 80.0}};
  for (auto [climb, dive] : excluded) {
    for (const DiveProfile& d : profiles) CHECK_FALSE((d.z_climb_to == climb && d.z_dive_to == dive));
  }
  // (0, 50) sits exactly on the amplitude limit and is kept.
  CHECK(profiles[5] == DiveProfile{0.0, 50.0, 5});
  CHECK(profiles[11] == DiveProfile{80.0 / 3, 200.0, 11});
  for (std::size_t i = 0; i < profiles.size(); ++i) CHECK(profiles[i].index == i);
}

TEST_CASE("single level on both axes") {
  DiveProfileParams p;
  p.n_climb_levels = 1;
  p.n_dive_levels = 1;
  const auto profiles = generate_dive_profiles(p);
  REQUIRE(profiles.size() == 1);
  CHECK(profiles[0] == DiveProfile{p.z_min, p.z_max, 0});
}

TEST_CASE("invalid parameters are rejected with the field name") {
  DiveProfileParams p;
  p.n_dive_levels = 0;
  try {
    generate_dive_profiles(p);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "profiles.n_dive_levels");
  }
  p = {};
  p.z_climb_to_max = 250.0;
  CHECK_THROWS_AS(generate_dive_profiles(p), ValidationError);
  p = {};
  p.d_min_range = 0.0;
  CHECK_THROWS_AS(generate_dive_profiles(p), ValidationError);
  p = {};
  p.d_min_range = 300.0;
  CHECK_THROWS_AS(generate_dive_profiles(p), ValidationError);
}

TEST_CASE("amplitude filter compares exactly") {
  // 0.3 + 0.4 rounds down, so the shallowest dive-to level ends up a hair
  // under d_min_range above z_min and is dropped.
  DiveProfileParams p{0.3, 1.0, 0.3, 0.4, 1, 2};
  const auto levels = dive_to_levels(p);
  REQUIRE(levels.size() == 2);
  CHECK(levels[1] - p.z_min < p.d_min_range);
  const auto profiles = generate_dive_profiles(p);
  REQUIRE(profiles.size() == 1);
  CHECK(profiles[0].z_dive_to == 1.0);
}

TEST_CASE("random parameter sets: filter, bounds and determinism") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::uniform_int_distribution<int> N(1, 8);
  int checked = 0;
  while (checked < 300) {
    DiveProfileParams p;
    p.z_min = 20.0 * U(rng);
    p.z_climb_to_max = p.z_min + 60.0 * U(rng);
    p.z_max = p.z_climb_to_max + 1.0 + 300.0 * U(rng);
    p.d_min_range = 1.0 + (p.z_max - p.z_min - 1.0) * U(rng);
    p.n_climb_levels = N(rng);
    p.n_dive_levels = N(rng);

    // Brute-force count over the level grid.
    const auto climbs = climb_to_levels(p);
    const auto dives = dive_to_levels(p);
    std::size_t expected = 0;
    for (double c : climbs)
      for (double d : dives) expected += (d - c >= p.d_min_range) ? 1 : 0;
    if (expected == 0) {
      CHECK_THROWS_AS(generate_dive_profiles(p), ValidationError);
      continue;
    }
    ++checked;
    const auto a = generate_dive_profiles(p);
    CHECK(a.size() == expected);
    CHECK(a.size() <= static_cast<std::size_t>(p.n_climb_levels * p.n_dive_levels));
    CHECK(a == generate_dive_profiles(p));
    for (const DiveProfile& d : a) {
      CHECK(d.amplitude() >= p.d_min_range);
      CHECK(d.z_climb_to >= p.z_min);
      CHECK(d.z_climb_to <= p.z_climb_to_max);
      CHECK(d.z_dive_to <= p.z_max);
      CHECK(d.z_climb_to < d.z_dive_to);
    }
  }
}

TEST_CASE("climb-to band equal to z_min keeps the full cross product") {
  DiveProfileParams p{5.0, 205.0, 5.0, 50.0, 3, 5};
  // Three identical climb-to levels at 5 m, dive-to from 205 down to 55 m.
  CHECK(generate_dive_profiles(p).size() == 15);
}
