#pragma once

#include <cstddef>
#include <vector>

namespace plstab {

// Convex piecewise-linear potential on explicit (non-uniform) breakpoints.
// Represents f = exp(-u) with u linear between breakpoints and +inf outside
// [xs.front(), xs.back()].  All stored values are finite.  This is the exact
// working representation behind the uniform-grid type: conjugation, weighted
// sup-convolution and L1 distances are closed-form on it.
struct PwlPotential {
  std::vector<double> xs;  // strictly increasing
  std::vector<double> us;  // potential values

  std::size_t size() const { return xs.size(); }
  double lo() const { return xs.front(); }
  double hi() const { return xs.back(); }
};

// Mean of exp(-u) over a segment with endpoint potentials u0, u1
// (integral per unit length).
double exp_segment_mean(double u0, double u1);

// u at x; +inf outside the breakpoint range.
double pwl_value(const PwlPotential& p, double x);

// exp(-u) at x; 0 outside.
double pwl_density(const PwlPotential& p, double x);

// Integral of exp(-u) over the whole support.
double pwl_mass(const PwlPotential& p);

// Integral of exp(-u) over [lo, hi] (clipped to the support).
double pwl_mass_between(const PwlPotential& p, double lo, double hi);

// First and second moments of exp(-u): integrals of x f and x^2 f.
double pwl_moment1(const PwlPotential& p);
double pwl_moment2(const PwlPotential& p);

// Smallest potential value and its location (leftmost on ties).
struct PwlMin {
  double x;
  double u;
};
PwlMin pwl_min(const PwlPotential& p);

// L1 distance between exp(-a(x - shift_a)) and exp(-b): exact on the merged
// breakpoint set, splitting each segment at the sign change.
double pwl_l1_distance(const PwlPotential& a, double shift_a, const PwlPotential& b);

// Drops leading/trailing collinear breakpoints; keeps interior ones intact.
PwlPotential pwl_simplify(const PwlPotential& p);

}  // namespace plstab
