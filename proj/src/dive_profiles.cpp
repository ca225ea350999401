#include "glider/dive_profiles.hpp"

#include <cmath>

#include "glider/errors.hpp"

namespace glider {

void DiveProfileParams::validate() const {
  for (double v : {z_min, z_max, z_climb_to_max, d_min_range}) {
    if (!std::isfinite(v)) throw ValidationError("profiles", "depths must be finite");
  }
  if (!(z_min >= 0.0)) throw ValidationError("profiles.z_min", "must be >= 0");
  if (!(z_climb_to_max >= z_min)) {
    throw ValidationError("profiles.z_climb_to_max", "must be >= z_min");
  }
  if (!(z_climb_to_max < z_max)) {
    throw ValidationError("profiles.z_max", "must be > z_climb_to_max");
  }
  if (!(d_min_range > 0.0)) throw ValidationError("profiles.d_min_range", "must be > 0");
  if (!(z_max - z_min >= d_min_range)) {
    throw ValidationError("profiles.d_min_range", "must not exceed z_max - z_min");
  }
  if (n_climb_levels < 1) throw ValidationError("profiles.n_climb_levels", "must be >= 1");
  if (n_dive_levels < 1) throw ValidationError("profiles.n_dive_levels", "must be >= 1");
}

namespace {

// n values from `first` to `last` with the endpoint pinned exactly.
std::vector<double> spaced_levels(double first, double last, int n) {
  std::vector<double> levels;
  levels.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    levels.push_back(first);
    return levels;
  }
  const double step = (last - first) / (n - 1);
  for (int i = 0; i < n - 1; ++i) levels.push_back(first + i * step);
  levels.push_back(last);
  return levels;
}

}  // namespace

std::vector<double> climb_to_levels(const DiveProfileParams& p) {
  return spaced_levels(p.z_min, p.z_climb_to_max, p.n_climb_levels);
}

std::vector<double> dive_to_levels(const DiveProfileParams& p) {
  return spaced_levels(p.z_max, p.z_min + p.d_min_range, p.n_dive_levels);
}

std::vector<DiveProfile> generate_dive_profiles(const DiveProfileParams& p) {
  p.validate();
  const auto climbs = climb_to_levels(p);
  const auto dives = dive_to_levels(p);

  std::vector<DiveProfile> out;
  for (double climb : climbs) {
    for (double dive : dives) {
      if (dive - climb >= p.d_min_range) {
        out.push_back({climb, dive, out.size()});
      }
    }
  }
  if (out.empty()) throw ValidationError("profiles", "no feasible dive profile");
  return out;
}

}  // namespace glider
