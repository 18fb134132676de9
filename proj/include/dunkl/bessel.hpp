#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include "dunkl/kappa.hpp"
#include "dunkl/simplex_quadrature.hpp"

namespace dunkl {

using ComplexValue = std::complex<double>;

/// E_kappa(e_ell, y) = c_kappa int_T e^{<y,t>} t_ell (t_0 ... t_{d-1})^{kappa-1} dt,
/// or with e^{i<y,t>} when `imaginary` is set.
ComplexValue dunkl_exp_axis(std::size_t ell, std::span<const double> y, bool imaginary, const KappaParams& params,
                            const SimplexRule& rule);

/// K_{kappa,d}(e_1, y) = (c_kappa / d) int_T e^{<y,t>} (t_0 ... t_{d-1})^{kappa-1} dt.
ComplexValue bessel_k(std::span<const double> y, bool imaginary, const KappaParams& params, const SimplexRule& rule);

/// K_{kappa,d}(e_ell, y) as the coset average (1/d) sum_j E_kappa(e_ell, y (ell j)).
ComplexValue bessel_k_coset(std::size_t ell, std::span<const double> y, bool imaginary, const KappaParams& params,
                            const SimplexRule& rule);

/// K_{kappa,2}(x, i y) for arbitrary x in R^2 by direct quadrature:
///   (c_kappa / 2) int e^{i(x_1 (y_1 t_0 + y_2 t_1) + x_2 (y_1 t_1 + y_2 t_0))} (t_0 t_1)^{kappa-1} dt.
ComplexValue bessel_k2_direct(std::span<const double> x, std::span<const double> y, const KappaParams& params,
                              const SimplexRule& rule);

/// J_nu(z), nu >= -1/2, by the ascending series.
double bessel_j_series(double nu, double z);
/// J_nu(z) through the Poisson integral with a Gauss-Gegenbauer rule.
double bessel_j_poisson(double nu, double z);
/// Series for |z| <= 8, Poisson integral beyond. Negative z needs integer nu.
double classical_bessel_j(double nu, double z);
/// Gamma(nu+1) (2/w)^nu J_nu(w), even and entire in w; 1 at w = 0.
double normalized_bessel_j(double nu, double w);

struct ClosedFormK2 {
  /// e^{i phi} Gamma(kappa+1/2) (4/z)^{kappa-1/2} J_{kappa-1/2}(z/2):
  /// the form whose z -> 0 limit is e^{i phi}, as V_kappa 1 = 1 requires.
  ComplexValue reconciled;
  /// The variant with a sqrt(pi) prefactor and base 2 inside the power;
  /// it equals reconciled * sqrt(pi) * 2^{1/2 - kappa}.
  ComplexValue printed;
  double phase = 0.0;  // (x_1 + x_2)(y_1 + y_2) / 2
  double z = 0.0;      // (x_1 - x_2)(y_1 - y_2)
};

/// Closed form of K_{kappa,2}(x, i y). |z| < 1e-3 uses three series terms.
ClosedFormK2 bessel_k2_closed(double kappa, std::span<const double> x, std::span<const double> y);

struct RecursiveK {
  ComplexValue value;
  /// Factor by which the constant c_{kappa,d} / c_{kappa,d-1} exceeds the one
  /// that makes K(e_1, 0) = 1; the implementation uses the latter.
  double printed_constant_factor = 1.0;
};

/// K_{kappa,d}(e_1, i y), d >= 3, by
///   (d-1) c_{kappa,d} / (d c_{kappa,d-1}) int_0^1 e^{i r y_d} K_{kappa,d-1}(e_1, i (1-r) y') r^{kappa-1} (1-r)^{(d-1)kappa-1} dr,
/// recursing down to the d = 2 closed form. `order` is the Gauss-Jacobi size per level.
RecursiveK bessel_recursive(std::span<const double> y, const KappaParams& params, std::size_t order);

}  // namespace dunkl
