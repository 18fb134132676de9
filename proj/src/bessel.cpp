#include "dunkl/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dunkl/gauss_jacobi.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/special.hpp"

namespace dunkl {

namespace {

template <class Phase, class Weight>
ComplexValue integrate_exp(const SimplexRule& rule, bool imaginary, Phase&& phase, Weight&& weight) {
  CompensatedSum re, im;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const auto t = rule.node(k);
    const double p = phase(t);
    const double w = rule.weight(k) * weight(t);
    if (imaginary) {
      re.add(w * std::cos(p));
      im.add(w * std::sin(p));
    } else {
      re.add(w * std::exp(p));
    }
  }
  return {re.value(), im.value()};
}

double dot(std::span<const double> y, std::span<const double> t) {
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) s += y[i] * t[i];
  return s;
}

}  // namespace

ComplexValue dunkl_exp_axis(std::size_t ell, std::span<const double> y, bool imaginary, const KappaParams& params,
                            const SimplexRule& rule) {
  if (y.size() != params.d()) throw std::invalid_argument("point dimension does not match params");
  if (ell >= params.d()) throw std::out_of_range("axis out of range");
  if (params.is_identity()) return imaginary ? std::polar(1.0, y[ell]) : ComplexValue(std::exp(y[ell]), 0.0);
  check_rule(rule, params);
  return params.c() *
         integrate_exp(rule, imaginary, [&](std::span<const double> t) { return dot(y, t); },
                       [&](std::span<const double> t) { return t[ell]; });
}

ComplexValue bessel_k(std::span<const double> y, bool imaginary, const KappaParams& params, const SimplexRule& rule) {
  if (y.size() != params.d()) throw std::invalid_argument("point dimension does not match params");
  if (params.is_identity()) throw std::invalid_argument("bessel_k needs kappa > 0");
  check_rule(rule, params);
  const double scale = params.c() / static_cast<double>(params.d());
  return scale * integrate_exp(rule, imaginary, [&](std::span<const double> t) { return dot(y, t); },
                               [](std::span<const double>) { return 1.0; });
}

ComplexValue bessel_k_coset(std::size_t ell, std::span<const double> y, bool imaginary, const KappaParams& params,
                            const SimplexRule& rule) {
  const std::size_t d = params.d();
  if (y.size() != d) throw std::invalid_argument("point dimension does not match params");
  std::vector<double> ys(y.begin(), y.end());
  ComplexValue sum = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    std::swap(ys[ell], ys[j]);
    sum += dunkl_exp_axis(ell, ys, imaginary, params, rule);
    std::swap(ys[ell], ys[j]);
  }
  return sum / static_cast<double>(d);
}

ComplexValue bessel_k2_direct(std::span<const double> x, std::span<const double> y, const KappaParams& params,
                              const SimplexRule& rule) {
  if (params.d() != 2 || x.size() != 2 || y.size() != 2) throw std::invalid_argument("bessel_k2_direct needs d = 2");
  check_rule(rule, params);
  return 0.5 * params.c() *
         integrate_exp(
             rule, true,
             [&](std::span<const double> t) {
               return x[0] * (y[0] * t[0] + y[1] * t[1]) + x[1] * (y[0] * t[1] + y[1] * t[0]);
             },
             [](std::span<const double>) { return 1.0; });
}

double bessel_j_series(double nu, double z) {
  if (nu < -0.5) throw std::invalid_argument("Bessel order must be >= -1/2");
  if (z == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (z < 0.0 && std::floor(nu) != nu) throw std::domain_error("J_nu(z) for z < 0 needs integer order");
  const double sign = (z < 0.0 && std::fmod(nu, 2.0) != 0.0) ? -1.0 : 1.0;
  const double h = std::fabs(z) / 2.0;
  // (z/2)^nu / Gamma(nu+1) times sum_k (-1)^k (z/2)^{2k} / (k! (nu+1)_k).
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= -h * h / (k * (nu + k));
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
  }
  return sign * std::exp(nu * std::log(h) - std::lgamma(nu + 1.0)) * sum;
}

double bessel_j_poisson(double nu, double z) {
  if (nu < -0.5) throw std::invalid_argument("Bessel order must be >= -1/2");
  if (z == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (z < 0.0 && std::floor(nu) != nu) throw std::domain_error("J_nu(z) for z < 0 needs integer order");
  const double sign = (z < 0.0 && std::fmod(nu, 2.0) != 0.0) ? -1.0 : 1.0;
  const double a = std::fabs(z);
  if (nu == -0.5) return sign * std::sqrt(2.0 / (std::numbers::pi * a)) * std::cos(a);
  const std::size_t m = std::max<std::size_t>(40, static_cast<std::size_t>(a) + 40);
  const QuadratureRule1D g = gauss_jacobi(m, nu - 0.5, nu - 0.5);
  CompensatedSum s;
  for (std::size_t i = 0; i < m; ++i) s.add(g.weights[i] * std::cos(a * g.nodes[i]));
  const double pref = std::exp(nu * std::log(a / 2.0) - 0.5 * std::log(std::numbers::pi) - std::lgamma(nu + 0.5));
  return sign * pref * s.value();
}

double classical_bessel_j(double nu, double z) {
  return std::fabs(z) <= 8.0 ? bessel_j_series(nu, z) : bessel_j_poisson(nu, z);
}

double normalized_bessel_j(double nu, double w) {
  if (nu < -0.5) throw std::invalid_argument("Bessel order must be >= -1/2");
  const double a = std::fabs(w);
  if (a <= 8.0) {
    const double h = a / 2.0;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
      term *= -h * h / (k * (nu + k));
      sum += term;
      if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
  }
  return std::exp(std::lgamma(nu + 1.0) + nu * std::log(2.0 / a)) * bessel_j_poisson(nu, a);
}

ClosedFormK2 bessel_k2_closed(double kappa, std::span<const double> x, std::span<const double> y) {
  if (x.size() != 2 || y.size() != 2) throw std::invalid_argument("closed form needs points in R^2");
  if (!(kappa > 0)) throw std::invalid_argument("closed form needs kappa > 0");
  ClosedFormK2 out;
  out.phase = (x[0] + x[1]) * (y[0] + y[1]) / 2.0;
  out.z = (x[0] - x[1]) * (y[0] - y[1]);
  const double nu = kappa - 0.5;
  const double w = std::fabs(out.z) / 2.0;
  double radial;
  if (std::fabs(out.z) < 1e-3) {
    const double w2 = w * w;
    radial = 1.0 - w2 / (4.0 * (nu + 1.0)) + w2 * w2 / (32.0 * (nu + 1.0) * (nu + 2.0));
  } else {
    radial = std::exp(std::lgamma(kappa + 0.5) + nu * std::log(4.0 / std::fabs(out.z))) * classical_bessel_j(nu, w);
  }
  out.reconciled = std::polar(radial, out.phase);
  out.printed = out.reconciled * std::sqrt(std::numbers::pi) * std::pow(2.0, 0.5 - kappa);
  return out;
}

namespace {

ComplexValue recursive_k(std::span<const double> y, double kappa, std::size_t order) {
  const std::size_t d = y.size();
  if (d == 2) {
    const double e1[2] = {1.0, 0.0};
    return bessel_k2_closed(kappa, e1, y).reconciled;
  }
  const double dd = static_cast<double>(d);
  const double log_const = std::log(dd - 1.0) - std::log(dd) + std::lgamma(dd * kappa + 1.0) - std::lgamma(kappa) -
                           std::lgamma((dd - 1.0) * kappa + 1.0);
  const QuadratureRule1D g = gauss_jacobi_unit(order, kappa - 1.0, (dd - 1.0) * kappa - 1.0);
  std::vector<double> sub(d - 1);
  CompensatedSum re, im;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = g.nodes[i];
    for (std::size_t j = 0; j + 1 < d; ++j) sub[j] = (1.0 - r) * y[j];
    const ComplexValue v = std::polar(1.0, r * y[d - 1]) * recursive_k(sub, kappa, order);
    re.add(g.weights[i] * v.real());
    im.add(g.weights[i] * v.imag());
  }
  return std::exp(log_const) * ComplexValue(re.value(), im.value());
}

}  // namespace

RecursiveK bessel_recursive(std::span<const double> y, const KappaParams& params, std::size_t order) {
  const std::size_t d = params.d();
  if (d < 3) throw std::invalid_argument("the recursion needs d >= 3");
  if (y.size() != d) throw std::invalid_argument("point dimension does not match params");
  if (params.is_identity()) throw std::invalid_argument("the recursion needs kappa > 0");
  RecursiveK out;
  out.value = recursive_k(y, params.kappa_value(), order);
  out.printed_constant_factor = static_cast<double>(d) / (static_cast<double>(d) - 1.0);
  return out;
}

}  // namespace dunkl
