#pragma once

#include <cmath>

#include "plstab/errors.hpp"

namespace plstab {

// Absolute constants appearing in the stability bounds.  None of them is
// pinned numerically by the theory; all default to 1 and every bound check
// reports both sides instead of asserting a fixed value.
struct Constants {
  double c0_1d = 1.0;    // one-dimensional error-estimate constant c0
  double c_thm15 = 1.0;  // c in the c^n n^n (eps/tau)^(1/19) residual bound
  double c_cor16 = 1.0;  // c in gamma = c^n / n^(19n)
  double c_thm17 = 1.0;  // c in the m-function residual bound

  void validate() const {
    if (!(c0_1d > 0.0 && c_thm15 > 0.0 && c_cor16 > 0.0 && c_thm17 > 0.0))
      throw ConfigInvalid("constants must be strictly positive");
  }
};

// Volume of the n-dimensional unit ball, pi^(n/2) / Gamma(n/2 + 1).
// Relative accuracy about 1e-12 (tgamma).
inline double unit_ball_volume(int n) {
  if (n < 0) throw DomainViolation("unit_ball_volume: n must be >= 0");
  return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

}  // namespace plstab
