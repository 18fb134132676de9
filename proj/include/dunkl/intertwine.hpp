#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "dunkl/kappa.hpp"
#include "dunkl/polynomial.hpp"
#include "dunkl/simplex_quadrature.hpp"
#include "dunkl/sphere.hpp"

namespace dunkl {

/// F(x_1, ..., x_d) = profile(x_axis). axis is 0-based.
struct AxisFunction {
  std::size_t axis;
  std::function<double(double)> profile;
};

/// V_kappa F(x) = c_kappa int_T f(<x,t>) t_axis (t_0 ... t_{d-1})^{kappa-1} dt.
/// The t_axis factor is applied in the integrand so one rule serves every
/// axis. kappa = 0 returns f(x_axis) without touching the rule.
double vk_axis(const AxisFunction& F, std::span<const double> x, const KappaParams& params, const SimplexRule& rule);

/// Throws std::invalid_argument if the rule was built for another (d, kappa).
void check_rule(const SimplexRule& rule, const KappaParams& params);

/// V_kappa[x_axis^n] exactly:
///   sum_{|a|=n} n!/a! (kappa+1)_{a_axis} prod_{i != axis} (kappa)_{a_i} / (d kappa + 1)_n x^a.
Polynomial vk_monomial_exact(unsigned n, std::size_t axis, const KappaParams& params);

struct IntertwiningFailure {
  std::size_t d;
  Rational kappa;
  std::size_t ell;  // 0-based
  unsigned n;
  std::size_t i;  // 0-based
};

struct IntertwiningReport {
  std::size_t checked = 0;
  std::vector<IntertwiningFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Checks D_i V[x_ell^n] == V[d_i x_ell^n] exactly for every ell, i and n <= n_max.
IntertwiningReport verify_intertwining(unsigned n_max, const KappaParams& params);

/// d = 2, generic f:
///   V f(x) = c_kappa int f(x_1 t_0 + x_2 t_1, x_1 t_1 + x_2 t_0) t_0^kappa t_1^{kappa-1} dt.
/// The extra t_0 rides in the integrand of the symmetric Dirichlet rule.
double vk_d2_generic(const std::function<double(double, double)>& f, std::span<const double> x,
                     const KappaParams& params, const SimplexRule& rule);

/// The same operator applied exactly to a bivariate polynomial, term by term:
/// y_1^a y_2^b expands into t-monomials integrated with Dirichlet moments.
Polynomial vk_d2_exact(const Polynomial& f, const KappaParams& params);

/// Z_2^d representation
///   V f(x) = c int_{[-1,1]^d} f(x_1 t_1, ..., x_d t_d) prod_i (1+t_i)(1-t_i^2)^{kappa_i-1} dt,
/// normalized so V1 = 1. kappa_i = 0 fixes t_i = 1.
double vk_z2d(const std::function<double(std::span<const double>)>& f, std::span<const double> x,
              std::span<const double> kappas, std::size_t order);

/// Both sides of
///   a_kappa int_S V[f(<x,.>)](y) h_kappa^2(y) dsigma(y) = b_lambda int_{-1}^1 f(|x| t)(1-t^2)^{lambda-1/2} dt.
/// For d > 2, x must be a multiple of a coordinate vector (V is only known on
/// axis functions); for d = 2 any x is accepted.
std::pair<double, double> vk_sphere_average(const std::function<double(double)>& f, std::span<const double> x,
                                            const KappaParams& params, const SphereRule& sphere,
                                            const SimplexRule& rule);

}  // namespace dunkl
