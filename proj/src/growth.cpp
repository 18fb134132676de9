#include "dunkl/growth.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dunkl {

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  const std::size_t m = x.size();
  if (m != y.size()) throw std::invalid_argument("x and y must have equal length");
  if (m < 3) throw std::invalid_argument("least squares needs at least three points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("least squares needs distinct x values");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = y[i] - f.intercept - f.slope * x[i];
    f.rss += r * r;
  }
  f.slope_se = std::sqrt(f.rss / static_cast<double>(m - 2) / sxx);
  return f;
}

GrowthFit classify_growth(std::span<const double> n, std::span<const double> values, double monotone_tolerance) {
  const std::size_t m = n.size();
  if (m != values.size()) throw std::invalid_argument("n and values must have equal length");
  std::vector<double> inv(m), logn(m), logv(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(n[i] > 0) || !(values[i] > 0)) throw std::invalid_argument("growth fits need positive n and values");
    inv[i] = 1.0 / n[i];
    logn[i] = std::log(n[i]);
    logv[i] = std::log(values[i]);
  }
  GrowthFit g;
  const LinearFit bounded = least_squares(inv, values);
  g.bounded_a = bounded.intercept;
  g.bounded_c = bounded.slope;
  g.bounded_rss = bounded.rss;

  const LinearFit lg = least_squares(logn, values);
  g.log_b = lg.slope;
  g.log_b_se = lg.slope_se;
  g.log_rss = lg.rss;

  const LinearFit pw = least_squares(logn, logv);
  g.power_p = pw.slope;
  g.power_p_se = pw.slope_se;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = values[i] - std::exp(pw.intercept + pw.slope * logn[i]);
    g.power_rss += r * r;
  }

  g.non_decreasing = true;
  for (std::size_t i = 1; i < m; ++i) {
    if (values[i] < values[i - 1] * (1.0 - monotone_tolerance)) g.non_decreasing = false;
  }

  const bool log_flat = g.log_b < 2.0 * g.log_b_se;
  const bool power_flat = g.power_p < 2.0 * g.power_p_se;
  if (log_flat && power_flat) {
    g.classification = "bounded";
    g.best_model = "bounded";
  } else {
    g.classification = "growing";
    g.best_model = g.log_rss <= g.power_rss ? "log" : "power";
  }
  return g;
}

}  // namespace dunkl
