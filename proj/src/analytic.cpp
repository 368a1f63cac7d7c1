#include "plstab/analytic.hpp"

#include <cmath>
#include <sstream>

#include "plstab/constants.hpp"
#include "plstab/errors.hpp"

namespace plstab {

namespace {
// exp(-v) * sum_{k=0}^{n} v^k / k!  (regularized upper incomplete gamma
// Q(n+1, v), evaluated by the finite sum).
double poisson_tail(int n, double v) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= n; ++k) {
    term *= v / k;
    sum += term;
  }
  return std::exp(-v) * sum;
}
}  // namespace

AnalyticDensity::AnalyticDensity(Kind k, int dim, double p0, double p1)
    : kind_(k), dim_(dim), p_{p0, p1} {}

AnalyticDensity AnalyticDensity::gaussian(double mu, double sigma) {
  if (!(sigma > 0.0)) throw ConfigInvalid("gaussian: sigma must be positive");
  return {Kind::Gaussian, 1, mu, sigma};
}

AnalyticDensity AnalyticDensity::uniform(double a, double b) {
  if (!(a < b)) throw ConfigInvalid("uniform: requires a < b");
  return {Kind::Uniform, 1, a, b};
}

AnalyticDensity AnalyticDensity::exponential(double rate) {
  if (!(rate > 0.0)) throw ConfigInvalid("exponential: rate must be positive");
  return {Kind::Exponential, 1, rate, 0.0};
}

AnalyticDensity AnalyticDensity::laplace(double mu, double scale) {
  if (!(scale > 0.0)) throw ConfigInvalid("laplace: scale must be positive");
  return {Kind::Laplace, 1, mu, scale};
}

AnalyticDensity AnalyticDensity::radial_exp(int dim, double height, double rate) {
  if (dim < 1) throw ConfigInvalid("radial_exp: dimension must be >= 1");
  if (!(height > 0.0) || !(rate > 0.0))
    throw ConfigInvalid("radial_exp: height and rate must be positive");
  return {Kind::RadialExp, dim, height, rate};
}

AnalyticDensity AnalyticDensity::radial_exp_normalized(int dim, double height) {
  double factorial = 1.0;
  for (int k = 2; k <= dim; ++k) factorial *= k;
  const double rate = std::pow(unit_ball_volume(dim) * factorial * height, 1.0 / dim);
  return radial_exp(dim, height, rate);
}

std::string AnalyticDensity::label() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Gaussian: os << "gaussian(mu=" << p_[0] << ",sigma=" << p_[1] << ")"; break;
    case Kind::Uniform: os << "uniform(a=" << p_[0] << ",b=" << p_[1] << ")"; break;
    case Kind::Exponential: os << "exponential(gamma=" << p_[0] << ")"; break;
    case Kind::Laplace: os << "laplace(mu=" << p_[0] << ",b=" << p_[1] << ")"; break;
    case Kind::RadialExp:
      os << "radialexp(n=" << dim_ << ",height=" << p_[0] << ",gamma=" << p_[1] << ")";
      break;
  }
  return os.str();
}

double AnalyticDensity::mass() const {
  switch (kind_) {
    case Kind::Gaussian:
    case Kind::Uniform:
    case Kind::Exponential:
    case Kind::Laplace:
      return 1.0;
    case Kind::RadialExp: {
      double factorial = 1.0;
      for (int k = 2; k <= dim_; ++k) factorial *= k;
      return p_[0] * factorial * unit_ball_volume(dim_) / std::pow(p_[1], dim_);
    }
  }
  return 0.0;
}

double AnalyticDensity::max_value() const {
  switch (kind_) {
    case Kind::Gaussian: return 1.0 / (p_[1] * std::sqrt(2.0 * M_PI));
    case Kind::Uniform: return 1.0 / (p_[1] - p_[0]);
    case Kind::Exponential: return p_[0];
    case Kind::Laplace: return 0.5 / p_[1];
    case Kind::RadialExp: return p_[0];
  }
  return 0.0;
}

double AnalyticDensity::level_volume(double t) const {
  if (!(t > 0.0)) throw DomainViolation("level_volume: level must be positive");
  const double m = max_value();
  if (t > m) throw LevelAboveMax("level exceeds the maximum of the density");
  const double v = std::log(m / t);
  switch (kind_) {
    case Kind::Gaussian: return 2.0 * p_[1] * std::sqrt(2.0 * v);
    case Kind::Uniform: return p_[1] - p_[0];
    case Kind::Exponential: return v / p_[0];
    case Kind::Laplace: return 2.0 * p_[1] * v;
    case Kind::RadialExp: return unit_ball_volume(dim_) * std::pow(v / p_[1], dim_);
  }
  return 0.0;
}

double AnalyticDensity::level_volume_integral(double t_hi) const {
  if (!(t_hi > 0.0)) throw DomainViolation("level must be positive");
  const double m = max_value();
  if (t_hi > m) throw LevelAboveMax("level exceeds the maximum of the density");
  const double v = std::log(m / t_hi);
  switch (kind_) {
    case Kind::Gaussian: {
      // 2 sqrt(2) sigma M * Gamma(3/2, v)
      const double g32 = 0.5 * std::sqrt(M_PI) * std::erfc(std::sqrt(v)) +
                         std::sqrt(v) * std::exp(-v);
      return 2.0 * std::sqrt(2.0) * p_[1] * m * g32;
    }
    case Kind::Uniform: return (p_[1] - p_[0]) * t_hi;
    case Kind::Exponential:
    case Kind::Laplace:
      return (1.0 + v) * std::exp(-v);
    case Kind::RadialExp: {
      double factorial = 1.0;
      for (int k = 2; k <= dim_; ++k) factorial *= k;
      const double scale = unit_ball_volume(dim_) * p_[0] * factorial / std::pow(p_[1], dim_);
      return scale * poisson_tail(dim_, v);
    }
  }
  return 0.0;
}

double AnalyticDensity::mass_below_level(double t) const {
  const double below = level_volume_integral(t) - t * level_volume(t);
  return std::max(0.0, below / mass());
}

double AnalyticDensity::value(double x) const {
  switch (kind_) {
    case Kind::Gaussian: {
      const double z = (x - p_[0]) / p_[1];
      return std::exp(-0.5 * z * z) / (p_[1] * std::sqrt(2.0 * M_PI));
    }
    case Kind::Uniform:
      return (x >= p_[0] && x <= p_[1]) ? 1.0 / (p_[1] - p_[0]) : 0.0;
    case Kind::Exponential:
      return x >= 0.0 ? p_[0] * std::exp(-p_[0] * x) : 0.0;
    case Kind::Laplace:
      return 0.5 / p_[1] * std::exp(-std::abs(x - p_[0]) / p_[1]);
    case Kind::RadialExp:
      if (dim_ != 1) throw DomainViolation("value: only 1-D densities can be evaluated");
      return p_[0] * std::exp(-p_[1] * std::abs(x));
  }
  return 0.0;
}

PotentialGrid AnalyticDensity::to_grid(int resolution) const {
  if (resolution < 2) throw ConfigInvalid("to_grid: resolution must be >= 2");
  if (kind_ == Kind::RadialExp && dim_ != 1)
    throw DomainViolation("to_grid: only 1-D densities can be gridded");

  // Truncate where the potential exceeds its minimum by 40 (density ratio
  // e^-40, below double-precision relevance at these scales).
  double lo = 0.0, hi = 0.0;
  switch (kind_) {
    case Kind::Gaussian:
      lo = p_[0] - p_[1] * std::sqrt(80.0);
      hi = p_[0] + p_[1] * std::sqrt(80.0);
      break;
    case Kind::Uniform:
      lo = p_[0];
      hi = p_[1];
      break;
    case Kind::Exponential:
      lo = 0.0;
      hi = 40.0 / p_[0];
      break;
    case Kind::Laplace:
      lo = p_[0] - 40.0 * p_[1];
      hi = p_[0] + 40.0 * p_[1];
      break;
    case Kind::RadialExp:
      lo = -40.0 / p_[1];
      hi = 40.0 / p_[1];
      break;
  }
  std::vector<double> u(resolution);
  const double dx = (hi - lo) / double(resolution - 1);
  for (int i = 0; i < resolution; ++i) {
    const double x = (i == resolution - 1) ? hi : lo + dx * i;
    switch (kind_) {
      case Kind::Gaussian: {
        const double z = (x - p_[0]) / p_[1];
        u[i] = 0.5 * z * z + std::log(p_[1] * std::sqrt(2.0 * M_PI));
        break;
      }
      case Kind::Uniform:
        u[i] = std::log(p_[1] - p_[0]);
        break;
      case Kind::Exponential:
        u[i] = p_[0] * x - std::log(p_[0]);
        break;
      case Kind::Laplace:
        u[i] = std::abs(x - p_[0]) / p_[1] + std::log(2.0 * p_[1]);
        break;
      case Kind::RadialExp:
        u[i] = p_[1] * std::abs(x) - std::log(p_[0]);
        break;
    }
  }
  return PotentialGrid::from_potentials(lo, hi, std::move(u));
}

}  // namespace plstab
