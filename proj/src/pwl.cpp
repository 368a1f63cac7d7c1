#include "plstab/pwl.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace plstab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// integral 0..1 of s * exp(-d s)
double seg_weight1(double d) {
  if (std::abs(d) < 1e-4) return 0.5 - d / 3.0 + d * d / 8.0 - d * d * d / 30.0;
  return (1.0 - (1.0 + d) * std::exp(-d)) / (d * d);
}

// integral 0..1 of s^2 * exp(-d s)
double seg_weight2(double d) {
  if (std::abs(d) < 1e-4) return 1.0 / 3.0 - d / 4.0 + d * d / 10.0 - d * d * d / 36.0;
  return (2.0 - (2.0 + 2.0 * d + d * d) * std::exp(-d)) / (d * d * d);
}
}  // namespace

double exp_segment_mean(double u0, double u1) {
  if (u0 == u1) return std::exp(-u0);
  const double d = u1 - u0;
  return std::exp(-u0) * (-std::expm1(-d)) / d;
}

double pwl_value(const PwlPotential& p, double x) {
  if (x < p.lo() || x > p.hi()) return kInf;
  const auto it = std::upper_bound(p.xs.begin(), p.xs.end(), x);
  std::size_t i = (it == p.xs.begin()) ? 0 : std::size_t(it - p.xs.begin()) - 1;
  if (i + 1 >= p.size()) i = p.size() - 2;
  const double x0 = p.xs[i], x1 = p.xs[i + 1];
  const double t = (x - x0) / (x1 - x0);
  return p.us[i] + t * (p.us[i + 1] - p.us[i]);
}

double pwl_density(const PwlPotential& p, double x) {
  const double u = pwl_value(p, x);
  return std::isinf(u) ? 0.0 : std::exp(-u);
}

double pwl_mass(const PwlPotential& p) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    total += (p.xs[i + 1] - p.xs[i]) * exp_segment_mean(p.us[i], p.us[i + 1]);
  return total;
}

double pwl_mass_between(const PwlPotential& p, double lo, double hi) {
  lo = std::max(lo, p.lo());
  hi = std::min(hi, p.hi());
  if (!(lo < hi)) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const double a = std::max(lo, p.xs[i]);
    const double b = std::min(hi, p.xs[i + 1]);
    if (!(a < b)) continue;
    total += (b - a) * exp_segment_mean(pwl_value(p, a), pwl_value(p, b));
  }
  return total;
}

double pwl_moment1(const PwlPotential& p) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const double x0 = p.xs[i], len = p.xs[i + 1] - x0;
    const double u0 = p.us[i], d = p.us[i + 1] - u0;
    const double a = exp_segment_mean(u0, p.us[i + 1]);
    const double b = std::exp(-u0) * seg_weight1(d);
    total += len * (x0 * a + len * b);
  }
  return total;
}

double pwl_moment2(const PwlPotential& p) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const double x0 = p.xs[i], len = p.xs[i + 1] - x0;
    const double u0 = p.us[i], d = p.us[i + 1] - u0;
    const double a = exp_segment_mean(u0, p.us[i + 1]);
    const double b = std::exp(-u0) * seg_weight1(d);
    const double c = std::exp(-u0) * seg_weight2(d);
    total += len * (x0 * x0 * a + 2.0 * x0 * len * b + len * len * c);
  }
  return total;
}

PwlMin pwl_min(const PwlPotential& p) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p.us[i] < p.us[best]) best = i;
  return {p.xs[best], p.us[best]};
}

double pwl_l1_distance(const PwlPotential& a, double shift_a, const PwlPotential& b) {
  const double mass_a = pwl_mass(a);
  const double mass_b = pwl_mass(b);
  const double lo = std::max(a.lo() + shift_a, b.lo());
  const double hi = std::min(a.hi() + shift_a, b.hi());
  if (!(lo < hi)) return mass_a + mass_b;

  std::vector<double> cuts;
  cuts.reserve(a.size() + b.size() + 2);
  cuts.push_back(lo);
  for (double x : a.xs) {
    const double z = x + shift_a;
    if (z > lo && z < hi) cuts.push_back(z);
  }
  for (double x : b.xs)
    if (x > lo && x < hi) cuts.push_back(x);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // integral of min(f_shifted, g) = integral of exp(-max(ua, ub))
  double common = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double p = cuts[i], q = cuts[i + 1];
    const double ap = pwl_value(a, p - shift_a), aq = pwl_value(a, q - shift_a);
    const double bp = pwl_value(b, p), bq = pwl_value(b, q);
    const double dl = ap - bp, dr = aq - bq;
    if (dl * dr < 0.0) {
      // potentials cross inside the segment
      const double t = dl / (dl - dr);
      const double xm = p + t * (q - p);
      const double um = ap + t * (aq - ap);  // = bp + t * (bq - bp)
      if (dl < 0.0) {
        common += (xm - p) * exp_segment_mean(bp, um);
        common += (q - xm) * exp_segment_mean(um, aq);
      } else {
        common += (xm - p) * exp_segment_mean(ap, um);
        common += (q - xm) * exp_segment_mean(um, bq);
      }
    } else {
      const double up = std::max(ap, bp), uq = std::max(aq, bq);
      common += (q - p) * exp_segment_mean(up, uq);
    }
  }
  double d = mass_a + mass_b - 2.0 * common;
  return std::max(d, 0.0);
}

PwlPotential pwl_simplify(const PwlPotential& p) {
  PwlPotential out;
  const std::size_t n = p.size();
  out.xs.reserve(n);
  out.us.reserve(n);
  const double xscale = std::max(1.0, std::max(std::abs(p.lo()), std::abs(p.hi())));
  for (std::size_t i = 0; i < n; ++i) {
    if (!out.xs.empty() && p.xs[i] - out.xs.back() <= 1e-14 * xscale) {
      out.us.back() = std::min(out.us.back(), p.us[i]);
      continue;
    }
    out.xs.push_back(p.xs[i]);
    out.us.push_back(p.us[i]);
  }
  if (out.size() < 3) return out;
  PwlPotential pruned;
  pruned.xs.reserve(out.size());
  pruned.us.reserve(out.size());
  pruned.xs.push_back(out.xs.front());
  pruned.us.push_back(out.us.front());
  for (std::size_t i = 1; i + 1 < out.size(); ++i) {
    const double t = (out.xs[i] - pruned.xs.back()) / (out.xs[i + 1] - pruned.xs.back());
    const double lerp = pruned.us.back() + t * (out.us[i + 1] - pruned.us.back());
    const double uscale = 1.0 + std::abs(out.us[i]) + std::abs(lerp);
    if (std::abs(out.us[i] - lerp) <= 1e-13 * uscale) continue;
    pruned.xs.push_back(out.xs[i]);
    pruned.us.push_back(out.us[i]);
  }
  pruned.xs.push_back(out.xs.back());
  pruned.us.push_back(out.us.back());
  return pruned;
}

}  // namespace plstab
