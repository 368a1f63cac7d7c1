#pragma once

#include <string>

#include "plstab/grid.hpp"

namespace plstab {

// Closed-form log-concave families with exact mass / max / level-set data.
// The 1-D members (all but RadialExp) are normalized probability densities.
// RadialExp realizes phi(x) = height * exp(-rate * |x|) on R^n, whose
// superlevel sets are balls.
class AnalyticDensity {
 public:
  enum class Kind { Gaussian, Uniform, Exponential, Laplace, RadialExp };

  static AnalyticDensity gaussian(double mu, double sigma);
  static AnalyticDensity uniform(double a, double b);
  static AnalyticDensity exponential(double rate);
  static AnalyticDensity laplace(double mu, double scale);
  static AnalyticDensity radial_exp(int dim, double height, double rate);

  // RadialExp with unit mass: rate chosen so kappa_n n! height / rate^n = 1.
  static AnalyticDensity radial_exp_normalized(int dim, double height);

  Kind kind() const { return kind_; }
  int dimension() const { return dim_; }
  std::string label() const;

  double mass() const;
  double max_value() const;
  // Volume of {phi >= t}; throws LevelAboveMax for t > max.
  double level_volume(double t) const;
  // Integral of the level-volume function over (0, t_hi]: the mass below
  // height t_hi, i.e. integral of min(phi, t_hi).
  double level_volume_integral(double t_hi) const;
  // Probability mass of {phi < t} under phi/mass (1-D and RadialExp).
  double mass_below_level(double t) const;

  // 1-D families only: density value and a uniform grid truncated where the
  // potential exceeds min + 40.
  double value(double x) const;
  PotentialGrid to_grid(int resolution) const;

  double param(int i) const { return p_[i]; }

 private:
  AnalyticDensity(Kind k, int dim, double p0, double p1);
  Kind kind_;
  int dim_;
  double p_[2];
};

}  // namespace plstab
