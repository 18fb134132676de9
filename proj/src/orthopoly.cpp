#include "dunkl/orthopoly.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "dunkl/special.hpp"

namespace dunkl {

JacobiParams::JacobiParams(double a, double b) : alpha(a), beta(b) {
  if (!(alpha > -1.0) || !(beta > -1.0)) throw std::invalid_argument("Jacobi parameters must exceed -1");
}

CesaroOrder::CesaroOrder(double d) : delta(d) {
  if (!(delta > -1.0)) throw std::invalid_argument("Cesaro order must exceed -1");
}

namespace {

double clamp_domain(double t) {
  constexpr double slack = 1e-12;
  if (!(t >= -1.0 - slack && t <= 1.0 + slack)) throw std::domain_error("argument outside [-1, 1]");
  return std::clamp(t, -1.0, 1.0);
}

}  // namespace

double jacobi_eval_unchecked(unsigned n, double alpha, double beta, double t) {
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = (alpha + 1.0) + (alpha + beta + 2.0) * (t - 1.0) / 2.0;
  const double ab = alpha + beta;
  for (unsigned k = 2; k <= n; ++k) {
    const double kk = k;
    const double denom = 2.0 * kk * (kk + ab) * (2.0 * kk + ab - 2.0);
    const double g1 = (2.0 * kk + ab - 1.0) * ((2.0 * kk + ab) * (2.0 * kk + ab - 2.0) * t + alpha * alpha - beta * beta);
    const double g0 = -2.0 * (kk + alpha - 1.0) * (kk + beta - 1.0) * (2.0 * kk + ab);
    const double p2 = (g1 * p1 + g0 * p0) / denom;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double jacobi_derivative_unchecked(unsigned n, double alpha, double beta, double t) {
  if (n == 0) return 0.0;
  return 0.5 * (n + alpha + beta + 1.0) * jacobi_eval_unchecked(n - 1, alpha + 1.0, beta + 1.0, t);
}

double jacobi_eval(unsigned n, const JacobiParams& jp, double t) {
  return jacobi_eval_unchecked(n, jp.alpha, jp.beta, clamp_domain(t));
}

double jacobi_at_one(unsigned n, const JacobiParams& jp) {
  return (log_pochhammer(jp.alpha + 1.0, n) / log_gamma(n + 1.0)).value();
}

double jacobi_h_norm(unsigned n, const JacobiParams& jp) {
  const double a = jp.alpha, b = jp.beta;
  const double log2 = std::log(2.0);
  if (n == 0) {
    const SignedLog v = log_gamma(a + 1.0) * log_gamma(b + 1.0) / log_gamma(a + b + 2.0);
    return std::exp((a + b + 1.0) * log2) * v.value();
  }
  const double nn = n;
  const SignedLog v = log_gamma(nn + a + 1.0) * log_gamma(nn + b + 1.0) / (log_gamma(nn + a + b + 1.0) * log_gamma(nn + 1.0));
  return std::exp((a + b + 1.0) * log2) / (2.0 * nn + a + b + 1.0) * v.value();
}

double gegenbauer_eval(unsigned n, double lambda, double t) {
  if (!(lambda > 0)) throw std::invalid_argument("Gegenbauer parameter must be positive");
  const JacobiParams jp(lambda - 0.5, lambda - 0.5);
  const double p = jacobi_eval(n, jp, t);
  const SignedLog ratio = log_pochhammer(2.0 * lambda, n) / log_pochhammer(lambda + 0.5, n);
  return ratio.value() * p;
}

double zn_eval(unsigned n, double lambda, double t) {
  return (n + lambda) / lambda * gegenbauer_eval(n, lambda, t);
}

std::vector<double> cesaro_term_weights(unsigned n, double delta) {
  const CesaroOrder order(delta);
  std::vector<double> w(n + 1);
  const SignedLog total = log_binomial_shift(n, order.delta);
  for (unsigned k = 0; k <= n; ++k) w[k] = (log_binomial_shift(n - k, order.delta) / total).value();
  return w;
}

std::vector<double> cesaro_partial_sum_weights(unsigned n, double delta) {
  const CesaroOrder order(delta);
  std::vector<double> w(n + 1);
  const SignedLog total = log_binomial_shift(n, order.delta);
  for (unsigned k = 0; k <= n; ++k) {
    // C(m + delta - 1, m) with m = n - k; for delta = 0 only m = 0 survives.
    const double m = n - k;
    if (order.delta == 0.0) {
      w[k] = (m == 0) ? 1.0 / total.value() : 0.0;
      continue;
    }
    const SignedLog num = log_gamma(m + order.delta) / (log_gamma(order.delta) * log_gamma(m + 1.0));
    w[k] = (num / total).value();
  }
  return w;
}

double cesaro_kernel_endpoint(unsigned n, const JacobiParams& jp, const CesaroOrder& delta, double t,
                              KernelNormalization norm) {
  const double x = clamp_domain(t);
  const std::vector<double> weights = cesaro_term_weights(n, delta.delta);
  std::vector<double> p(n + 1);
  JacobiFamily(n, jp).evaluate_all(x, p);
  CompensatedSum sum;
  for (unsigned k = 0; k <= n; ++k) sum.add(weights[k] * jacobi_at_one(k, jp) / jacobi_h_norm(k, jp) * p[k]);
  const double raw = sum.value();
  return norm == KernelNormalization::probability ? raw * jacobi_h_norm(0, jp) : raw;
}

JacobiFamily::JacobiFamily(unsigned max_degree, const JacobiParams& jp)
    : max_degree_(max_degree), jp_(jp), a_(max_degree + 1, 0.0), b_(max_degree + 1, 0.0), c_(max_degree + 1, 0.0) {
  const double al = jp.alpha, be = jp.beta, ab = al + be;
  if (max_degree >= 1) {
    a_[1] = (ab + 2.0) / 2.0;
    b_[1] = (al + 1.0) - (ab + 2.0) / 2.0;
  }
  for (unsigned k = 2; k <= max_degree; ++k) {
    const double kk = k;
    const double denom = 2.0 * kk * (kk + ab) * (2.0 * kk + ab - 2.0);
    a_[k] = (2.0 * kk + ab - 1.0) * (2.0 * kk + ab) * (2.0 * kk + ab - 2.0) / denom;
    b_[k] = (2.0 * kk + ab - 1.0) * (al * al - be * be) / denom;
    c_[k] = 2.0 * (kk + al - 1.0) * (kk + be - 1.0) * (2.0 * kk + ab) / denom;
  }
}

void JacobiFamily::evaluate_all(double t, std::span<double> out) const {
  if (out.size() != max_degree_ + 1) throw std::invalid_argument("output span has wrong size");
  out[0] = 1.0;
  if (max_degree_ == 0) return;
  out[1] = a_[1] * t + b_[1];
  for (unsigned k = 2; k <= max_degree_; ++k) out[k] = (a_[k] * t + b_[k]) * out[k - 1] - c_[k] * out[k - 2];
}

double jacobi_derivative_shift(unsigned n, const JacobiParams& jp) {
  static constexpr std::array<double, 4> stencil{4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
  const double step = 0.05 / ((n + 2.0) * (n + 2.0));
  const double scale = 2.0 / (n + jp.alpha + jp.beta + 2.0);
  constexpr int grid = 201;
  double max_diff = 0.0, max_lhs = 0.0;
  for (int g = 0; g < grid; ++g) {
    const double t = -1.0 + 2.0 * g / (grid - 1);
    const double lhs = jacobi_eval_unchecked(n, jp.alpha + 1.0, jp.beta + 1.0, t);
    double deriv = 0.0;
    for (int s = 1; s <= 4; ++s) {
      const double fp = jacobi_eval_unchecked(n + 1, jp.alpha, jp.beta, t + s * step);
      const double fm = jacobi_eval_unchecked(n + 1, jp.alpha, jp.beta, t - s * step);
      deriv += stencil[s - 1] * (fp - fm);
    }
    deriv /= step;
    max_diff = std::max(max_diff, std::fabs(lhs - scale * deriv));
    max_lhs = std::max(max_lhs, std::fabs(lhs));
  }
  return max_diff / std::max(1.0, max_lhs);
}

}  // namespace dunkl
