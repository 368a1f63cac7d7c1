#include "plstab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plstab/errors.hpp"

namespace plstab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

PotentialGrid PotentialGrid::from_potentials(double x_lo, double x_hi,
                                             std::vector<double> u, double tol_convex) {
  if (!(x_lo < x_hi)) throw NonUniformGrid("domain must satisfy x_lo < x_hi");
  if (u.size() < 2) throw NonUniformGrid("need at least 2 nodes");
  PotentialGrid g;
  g.x_lo_ = x_lo;
  g.x_hi_ = x_hi;
  g.u_ = std::move(u);
  g.dx_ = (x_hi - x_lo) / double(g.u_.size() - 1);

  const int n = g.n_nodes();
  int first = -1, last = -1;
  for (int i = 0; i < n; ++i) {
    if (std::isnan(g.u_[i])) throw NonLogConcaveInput("potential value is NaN");
    if (!std::isinf(g.u_[i])) {
      if (first < 0) first = i;
      last = i;
    }
  }
  if (first < 0) throw EmptySupport("all values are zero");
  for (int i = first; i <= last; ++i)
    if (std::isinf(g.u_[i]))
      throw NonLogConcaveInput("support must be a contiguous block");
  g.support_first_ = first;
  g.support_last_ = last;

  double u_min = kInf, u_max = -kInf;
  for (int i = first; i <= last; ++i) {
    u_min = std::min(u_min, g.u_[i]);
    u_max = std::max(u_max, g.u_[i]);
  }
  const double tol = tol_convex * std::max(1.0, u_max - u_min);
  for (int i = first + 1; i < last; ++i) {
    const double second = g.u_[i + 1] - 2.0 * g.u_[i] + g.u_[i - 1];
    if (second < -tol)
      throw NonLogConcaveInput("discrete convexity violated at node " + std::to_string(i));
  }
  return g;
}

double PotentialGrid::potential_at(double x) const {
  if (x < x_lo_ || x > x_hi_) return kInf;
  int i = int((x - x_lo_) / dx_);
  i = std::clamp(i, 0, n_nodes() - 2);
  const double t = (x - node_x(i)) / dx_;
  if (t <= 0.0) return u_[i];
  if (t >= 1.0) return u_[i + 1];
  if (std::isinf(u_[i]) || std::isinf(u_[i + 1])) return kInf;
  return u_[i] + t * (u_[i + 1] - u_[i]);
}

double PotentialGrid::density_at(double x) const {
  const double u = potential_at(x);
  return std::isinf(u) ? 0.0 : std::exp(-u);
}

PwlPotential PotentialGrid::support_potential() const {
  PwlPotential p;
  p.xs.reserve(support_last_ - support_first_ + 1);
  p.us.reserve(support_last_ - support_first_ + 1);
  for (int i = support_first_; i <= support_last_; ++i) {
    p.xs.push_back(node_x(i));
    p.us.push_back(u_[i]);
  }
  return p;
}

PotentialGrid make_grid_density(std::span<const double> xs, std::span<const double> fs,
                                double tol_convex) {
  if (xs.size() != fs.size() || xs.size() < 2)
    throw NonUniformGrid("need matching x and f lists with at least 2 samples");
  const double dx = xs[1] - xs[0];
  if (!(dx > 0.0)) throw NonUniformGrid("grid must be strictly increasing");
  const double span = xs.back() - xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (std::abs(xs[i] - xs[i - 1] - dx) > 1e-9 * std::max(1.0, span))
      throw NonUniformGrid("grid spacing is not uniform");
  std::vector<double> u(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!(fs[i] >= 0.0)) throw NonLogConcaveInput("density values must be >= 0");
    u[i] = fs[i] > 0.0 ? -std::log(fs[i]) : kInf;
  }
  return PotentialGrid::from_potentials(xs.front(), xs.back(), std::move(u), tol_convex);
}

double integrate(const PotentialGrid& f) { return pwl_mass(f.support_potential()); }

double density_mean(const PotentialGrid& f) {
  const PwlPotential p = f.support_potential();
  return pwl_moment1(p) / pwl_mass(p);
}

double density_stddev(const PotentialGrid& f) {
  const PwlPotential p = f.support_potential();
  const double m0 = pwl_mass(p);
  const double m1 = pwl_moment1(p) / m0;
  const double m2 = pwl_moment2(p) / m0;
  return std::sqrt(std::max(0.0, m2 - m1 * m1));
}

MaxPoint max_point(const PotentialGrid& f) {
  const auto& u = f.potentials();
  int best = f.support_first();
  for (int i = f.support_first() + 1; i <= f.support_last(); ++i)
    if (u[i] < u[best]) best = i;
  return {f.node_x(best), std::exp(-u[best])};
}

std::optional<Interval> superlevel_set(const PotentialGrid& f, double t) {
  if (!(t > 0.0)) throw DomainViolation("superlevel_set: level must be positive");
  const double c = -std::log(t);  // sublevel threshold for u
  const auto& u = f.potentials();
  const int first = f.support_first(), last = f.support_last();
  int lo = -1, hi = -1;
  for (int i = first; i <= last; ++i)
    if (u[i] <= c) {
      if (lo < 0) lo = i;
      hi = i;
    }
  if (lo < 0) {
    // The minimum may sit strictly between nodes only at a kink; with convex
    // linear interpolation the node minimum is the global minimum.
    return std::nullopt;
  }
  double left = f.node_x(lo);
  if (lo > first) {
    const double u0 = u[lo - 1], u1 = u[lo];
    left = f.node_x(lo - 1) + f.dx() * (u0 - c) / (u0 - u1);
  }
  double right = f.node_x(hi);
  if (hi < last) {
    const double u0 = u[hi], u1 = u[hi + 1];
    right = f.node_x(hi) + f.dx() * (c - u0) / (u1 - u0);
  }
  return Interval{left, right};
}

PotentialGrid translate_scale(const PotentialGrid& f, double a, double z0) {
  if (!(a > 0.0)) throw DomainViolation("translate_scale: a must be positive");
  std::vector<double> u = f.potentials();
  const double shift = std::log(a);
  for (double& v : u)
    if (!std::isinf(v)) v -= shift;
  return PotentialGrid::from_potentials(f.x_lo() + z0, f.x_hi() + z0, std::move(u));
}

PotentialGrid sample_to_grid(const PwlPotential& w, double dx_hint, double tol_convex) {
  const double width = w.hi() - w.lo();
  if (!(width > 0.0)) throw EmptySupport("potential support has zero length");
  const int n = std::max(2, int(std::ceil(width / dx_hint)) + 1);
  std::vector<double> u(n);
  const double dx = width / double(n - 1);
  for (int i = 0; i < n; ++i) {
    const double x = (i == n - 1) ? w.hi() : w.lo() + dx * i;
    u[i] = pwl_value(w, x);
  }
  return PotentialGrid::from_potentials(w.lo(), w.hi(), std::move(u), tol_convex);
}

}  // namespace plstab
