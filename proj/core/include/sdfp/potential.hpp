// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "sdfp/block_vec.hpp"

namespace sdfp {

/// The calibration constants of the method for total dimension n. Everything
/// is kept in natural-log form: det(x) underflows double precision already
/// for moderate n (det <= n^{-n} on the spectraplex).
struct Calibration {
  int n = 0;                 ///< total dimension, sum of block sizes
  double eta = 1.0;          ///< growth margin of det(e+y) over the spectraplex
  double kappa = 0.25;       ///< eta / (2 (1 + eta))
  double epsilon = 0.0;      ///< ln(4/3) / n
  double theta = 1.0;        ///< upper bound on ||x|| over the spectraplex
  double growth = 1.5;       ///< 1 + eta/2, per-scaling potential factor
  double log_U_plus = 0.0;   ///< ln of the potential maximum: -n ln n
  double log_U_minus = 0.0;  ///< caller-supplied ln of the potential floor
};

/// Builds the calibration for dimension n. Throws InvalidBounds unless
/// log_U_minus < log_U_plus.
Calibration calibrate(int n, double log_U_minus);

/// ln det x; -infinity on the boundary of the cone.
double log_potential(const BlockVec& x);

/// Maximum number of scaling iterations before infeasibility is certified:
/// ceil((log_U_plus - log_U_minus) / ln(3/2)).
std::int64_t scaling_budget(const Calibration& cal);

/// Maximum number of basic steps between two consecutive scalings:
/// ceil(1/epsilon^2) with theta = 1.
std::int64_t basic_budget(const Calibration& cal);

}  // namespace sdfp
