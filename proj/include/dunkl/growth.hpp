#pragma once

#include <span>
#include <string>

namespace dunkl {

/// Ordinary least squares y = intercept + slope * x.
struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double slope_se = 0.0;  // standard error of the slope
  double rss = 0.0;       // residual sum of squares
};

LinearFit least_squares(std::span<const double> x, std::span<const double> y);

/// Fits of I_n over a range of n against
///   bounded: a + c / n
///   log:     a + b log n
///   power:   a n^p (least squares in log-log coordinates)
/// Residuals are reported in the original scale for all three.
struct GrowthFit {
  double bounded_a = 0.0, bounded_c = 0.0, bounded_rss = 0.0;
  double log_b = 0.0, log_b_se = 0.0, log_rss = 0.0;
  double power_p = 0.0, power_p_se = 0.0, power_rss = 0.0;
  /// "bounded" or "growing".
  std::string classification;
  /// Model with the smallest residual among the growing ones ("log" or "power"),
  /// or "bounded".
  std::string best_model;
  /// True when I_n never drops by more than `monotone_tolerance` (relative) from one n to the next.
  bool non_decreasing = false;
};

/// Classifies I_n on n in [n_lo, n_hi]. `n` and `values` run in lockstep.
GrowthFit classify_growth(std::span<const double> n, std::span<const double> values,
                          double monotone_tolerance = 1e-9);

}  // namespace dunkl
