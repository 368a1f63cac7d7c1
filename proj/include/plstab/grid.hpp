#pragma once

#include <optional>
#include <span>
#include <vector>

#include "plstab/body.hpp"
#include "plstab/pwl.hpp"

namespace plstab {

inline constexpr double kDefaultConvexTol = 1e-9;

// One-dimensional log-concave function f = exp(-u) stored as its convex
// potential u on a uniform grid.  Zero values carry a +inf sentinel; the
// finite entries form one contiguous block, so the support of f is an
// interval.  Immutable after construction.
class PotentialGrid {
 public:
  // Validates grid geometry, support contiguity and discrete convexity
  // (u[i+1] - 2u[i] + u[i-1] >= -tol, with tol relative to the potential
  // range).  Throws NonLogConcaveInput / EmptySupport.
  static PotentialGrid from_potentials(double x_lo, double x_hi, std::vector<double> u,
                                       double tol_convex = kDefaultConvexTol);

  double x_lo() const { return x_lo_; }
  double x_hi() const { return x_hi_; }
  int n_nodes() const { return static_cast<int>(u_.size()); }
  double dx() const { return dx_; }
  const std::vector<double>& potentials() const { return u_; }
  double node_x(int i) const { return x_lo_ + dx_ * i; }

  int support_first() const { return support_first_; }
  int support_last() const { return support_last_; }
  double support_lo() const { return node_x(support_first_); }
  double support_hi() const { return node_x(support_last_); }

  // u at x (+inf outside the support), f at x.
  double potential_at(double x) const;
  double density_at(double x) const;

  // The finite block as an explicit piecewise-linear potential.
  PwlPotential support_potential() const;

 private:
  PotentialGrid() = default;
  double x_lo_ = 0.0, x_hi_ = 0.0, dx_ = 0.0;
  std::vector<double> u_;
  int support_first_ = 0, support_last_ = 0;
};

// Builds a grid from (x, f) samples on a uniform grid; f values of zero map
// to the +inf sentinel.  Throws NonUniformGrid / EmptySupport /
// NonLogConcaveInput.
PotentialGrid make_grid_density(std::span<const double> xs, std::span<const double> fs,
                                double tol_convex = kDefaultConvexTol);

// Exact integral of the piecewise log-linear interpolant.
double integrate(const PotentialGrid& f);

// Mean and standard deviation of f / integrate(f).
double density_mean(const PotentialGrid& f);
double density_stddev(const PotentialGrid& f);

struct MaxPoint {
  double x;
  double value;  // M = exp(-min u)
};

// Node minimizing u; ties broken toward the smallest x.
MaxPoint max_point(const PotentialGrid& f);

// {f >= t} as an interval, or nullopt when t exceeds the maximum.  Endpoints
// solved exactly on the piecewise-linear potential.
std::optional<Interval> superlevel_set(const PotentialGrid& f, double t);

// Represents a * f(x - z0); requires a > 0.
PotentialGrid translate_scale(const PotentialGrid& f, double a, double z0);

// Uniform resampling of an explicit potential; spacing at most dx_hint.
PotentialGrid sample_to_grid(const PwlPotential& w, double dx_hint,
                             double tol_convex = kDefaultConvexTol);

}  // namespace plstab
