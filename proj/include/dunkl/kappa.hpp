#pragma once

#include <cstddef>

#include "dunkl/rational.hpp"

namespace dunkl {

/// The ambient dimension d and the S_d multiplicity kappa, together with
/// the constants that every other module derives from them.
///
///   lambda         = C(d,2) kappa + (d-2)/2
///   critical_delta = lambda - (d-1) kappa = C(d-1,2) kappa + (d-2)/2
///   c              = Gamma(d kappa + 1) / (kappa Gamma(kappa)^d)
///   a              = normalization of h_kappa^2 on the unit sphere
///
/// kappa = 0 is accepted (V_kappa is then the identity); `c()` is 1 in that
/// case because every path using it short-circuits to the identity.
class KappaParams {
 public:
  KappaParams(std::size_t d, Rational kappa);

  /// Decimal kappa; the exact mirror is the best rational approximation
  /// with denominator <= 10^6.
  static KappaParams from_double(std::size_t d, double kappa);

  std::size_t d() const { return d_; }
  const Rational& kappa() const { return kappa_; }
  double kappa_value() const { return kappa_d_; }
  bool is_identity() const { return kappa_ == 0; }

  const Rational& lambda_exact() const { return lambda_; }
  double lambda() const { return lambda_.get_d(); }
  const Rational& critical_delta_exact() const { return critical_; }
  double critical_delta() const { return critical_.get_d(); }

  double c() const { return c_; }
  double a() const { return a_; }

 private:
  std::size_t d_;
  Rational kappa_;
  double kappa_d_;
  Rational lambda_;
  Rational critical_;
  double c_;
  double a_;
};

/// Surface area of S^{d-1}: 2 pi^{d/2} / Gamma(d/2).
double sphere_area(std::size_t d);

/// The closed-form h_kappa^2 normalization for S_d.
double norm_const_a_closed(std::size_t d, double kappa);

/// Gamma(d kappa + 1) / (kappa Gamma(kappa)^d).
double c_kappa(std::size_t d, double kappa);

/// dim H_n^d = C(n+d-1, n) - C(n+d-3, n-2).
std::size_t harmonic_dimension(unsigned n, std::size_t d);

}  // namespace dunkl
