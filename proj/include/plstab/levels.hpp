#pragma once

#include <vector>

#include "plstab/analytic.hpp"
#include "plstab/grid.hpp"

namespace plstab {

// Decreasing map t -> volume of the superlevel set {phi >= t}, sampled at
// strictly increasing levels.
struct LevelProfile {
  struct Entry {
    double t;
    double vol;
  };
  std::vector<Entry> entries;  // t strictly increasing, vol non-increasing
  double max_level = 0.0;

  void validate() const;
};

// Profile at geometrically spaced levels in (max * 1e-12, max].
LevelProfile level_profile(const PotentialGrid& f, int n_levels = 512);
LevelProfile level_profile(const AnalyticDensity& d, int n_levels = 512);

// Integral of the profile over (0, max]: levels are uniform in -ln t, the
// grid volume is piecewise linear there, so each slice has a closed form.
// The layer-cake identity makes this approximate integrate(f).
double layer_cake_integral(const LevelProfile& p);

}  // namespace plstab
