#pragma once

#include <cstddef>
#include <vector>

namespace glider {

/// Depth band (meters) from which the candidate sawtooth profiles are drawn.
struct DiveProfileParams {
  double z_min = 0.0;
  double z_max = 200.0;
  double z_climb_to_max = 40.0;
  double d_min_range = 50.0;  // minimum dive amplitude
  int n_climb_levels = 4;
  int n_dive_levels = 6;

  void validate() const;
};

/// One candidate sawtooth: the glider turns around at `z_climb_to` (shallow)
/// and `z_dive_to` (deep).
struct DiveProfile {
  double z_climb_to = 0.0;
  double z_dive_to = 0.0;
  std::size_t index = 0;

  double amplitude() const { return z_dive_to - z_climb_to; }
  friend bool operator==(const DiveProfile&, const DiveProfile&) = default;
};

/// Shallow turning depths, ascending from z_min to z_climb_to_max.
std::vector<double> climb_to_levels(const DiveProfileParams& p);

/// Deep turning depths, descending from z_max to z_min + d_min_range.
std::vector<double> dive_to_levels(const DiveProfileParams& p);

/// Cross product of the climb-to and dive-to levels (climb-to outer, ascending;
/// dive-to inner, descending), keeping pairs whose amplitude is at least
/// d_min_range. Throws ValidationError on bad parameters or an empty result.
std::vector<DiveProfile> generate_dive_profiles(const DiveProfileParams& p);

}  // namespace glider
