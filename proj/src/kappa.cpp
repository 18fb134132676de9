#include "dunkl/kappa.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dunkl {

double sphere_area(std::size_t d) {
  const double h = 0.5 * static_cast<double>(d);
  return 2.0 * std::pow(std::numbers::pi, h) / std::tgamma(h);
}

double c_kappa(std::size_t d, double kappa) {
  if (kappa <= 0) throw std::invalid_argument("c_kappa requires kappa > 0");
  const double dd = static_cast<double>(d);
  return std::exp(std::lgamma(dd * kappa + 1.0) - std::log(kappa) - dd * std::lgamma(kappa));
}

double norm_const_a_closed(std::size_t d, double kappa) {
  const double dd = static_cast<double>(d);
  const double pairs = dd * (dd - 1.0) / 2.0;
  double log_a = pairs * kappa * std::log(2.0) - std::log(sphere_area(d)) +
                 std::lgamma(pairs * kappa + dd / 2.0) - std::lgamma(dd / 2.0);
  for (std::size_t j = 2; j <= d; ++j) {
    log_a += std::lgamma(kappa + 1.0) - std::lgamma(static_cast<double>(j) * kappa + 1.0);
  }
  return std::exp(log_a);
}

std::size_t harmonic_dimension(unsigned n, std::size_t d) {
  auto choose = [](long long top, long long k) -> long long {
    if (k < 0 || top < 0 || k > top) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (top - k + i) / i;
    return r;
  };
  const long long nn = n, dd = static_cast<long long>(d);
  return static_cast<std::size_t>(choose(nn + dd - 1, nn) - choose(nn + dd - 3, nn - 2));
}

KappaParams::KappaParams(std::size_t d, Rational kappa) : d_(d), kappa_(std::move(kappa)) {
  if (d < 2) throw std::invalid_argument("KappaParams requires d >= 2");
  if (kappa_ < 0) throw std::invalid_argument("KappaParams requires kappa >= 0");
  kappa_d_ = kappa_.get_d();
  const Rational pairs(static_cast<long>(d * (d - 1) / 2));
  const Rational pairs_minus(static_cast<long>((d - 1) * (d - 2) / 2));
  const Rational half_excess(static_cast<long>(d) - 2, 2);
  lambda_ = pairs * kappa_ + half_excess;
  lambda_.canonicalize();
  critical_ = pairs_minus * kappa_ + half_excess;
  critical_.canonicalize();
  c_ = is_identity() ? 1.0 : c_kappa(d, kappa_d_);
  a_ = norm_const_a_closed(d, kappa_d_);
}

KappaParams KappaParams::from_double(std::size_t d, double kappa) {
  return KappaParams(d, best_rational(kappa, 1000000));
}

}  // namespace dunkl
