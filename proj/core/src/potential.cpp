// SPDX-License-Identifier: Apache-2.0
#include "sdfp/potential.hpp"

#include <cmath>

namespace sdfp {

Calibration calibrate(int n, double log_U_minus) {
  if (n < 1) {
    throw InvalidBounds("calibrate: dimension must be positive");
  }
  Calibration cal;
  cal.n = n;
  cal.eta = 1.0;
  cal.kappa = cal.eta / (2.0 * (1.0 + cal.eta));
  cal.epsilon = std::log(4.0 / 3.0) / n;
  cal.theta = 1.0;
  cal.growth = 1.0 + cal.eta / 2.0;
  cal.log_U_plus = -n * std::log(static_cast<double>(n));
  cal.log_U_minus = log_U_minus;
  if (!(cal.log_U_minus < cal.log_U_plus)) {
    throw InvalidBounds("calibrate: potential floor must lie below the maximum");
  }
  return cal;
}

double log_potential(const BlockVec& x) { return logdet(x); }

std::int64_t scaling_budget(const Calibration& cal) {
  const double ratio = (cal.log_U_plus - cal.log_U_minus) / std::log(cal.growth);
  return static_cast<std::int64_t>(std::ceil(ratio));
}

std::int64_t basic_budget(const Calibration& cal) {
  const double theta2 = cal.theta * cal.theta;
  return static_cast<std::int64_t>(std::ceil(theta2 * theta2 / (cal.epsilon * cal.epsilon)));
}

}  // namespace sdfp
