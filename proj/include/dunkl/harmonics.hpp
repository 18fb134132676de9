#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dunkl/kappa.hpp"
#include "dunkl/polynomial.hpp"
#include "dunkl/simplex_quadrature.hpp"
#include "dunkl/sphere.hpp"

namespace dunkl {

/// h_kappa(x) = prod_{i<j} |x_i - x_j|^kappa.
double hweight(std::span<const double> x, const KappaParams& params);

/// {closed form, 1 / int_S h_kappa^2 dsigma by quadrature}.
std::pair<double, double> norm_const_a(const KappaParams& params, const SphereRule& sphere);

/// Sphere order that integrates products of two degree-n polynomials against
/// h_kappa^2 exactly when kappa is an integer.
std::size_t harmonic_sphere_order(unsigned n, const KappaParams& params);

/// Orthonormal basis of H_n^d(h_kappa^2) for <f,g> = a_kappa int_S f g h_kappa^2 dsigma.
///
/// The nullspace of Delta_kappa on homogeneous degree-n polynomials is kept
/// exactly (`spanning`). Orthonormal coefficients are irrational in general,
/// so the basis is Y_j = sum_i transform[j][i] spanning[i] with
/// transform = L^{-1} from the Cholesky factor of the Gram matrix.
struct HarmonicBasis {
  unsigned n = 0;
  std::size_t d = 0;
  Rational kappa;
  std::vector<Polynomial> spanning;
  std::vector<std::vector<double>> transform;
  double gram_residual = 0.0;   // max |T G T^t - I|
  double gram_condition = 0.0;  // cond_2(G)

  std::size_t size() const { return spanning.size(); }
  /// Y_j(x) for every j.
  std::vector<double> evaluate(std::span<const double> x) const;
  /// Y_j with floating coefficients, as {"d", "terms": [{"exp", "coef"}]}.
  nlohmann::json orthonormal_json(std::size_t j) const;
};

/// Exact nullspace of Delta_kappa : P_n -> P_{n-2} (rational row reduction).
/// Throws std::logic_error when its dimension differs from dim(n, d).
std::vector<Polynomial> hharmonic_nullspace(unsigned n, const KappaParams& params);

/// Throws std::runtime_error when the Gram matrix is not positive definite.
HarmonicBasis hharmonic_basis(unsigned n, const KappaParams& params, const SphereRule& sphere);

/// P_n(h_kappa^2; x, e_ell) = c_kappa int_T Z_n^lambda(<x,t>) t_ell (t_0 ... t_{d-1})^{kappa-1} dt.
/// kappa = 0 gives Z_n^{(d-2)/2}(x_ell).
double repro_kernel_axis(unsigned n, std::size_t ell, std::span<const double> x, const KappaParams& params,
                         const SimplexRule& rule);

/// sum_j Y_j(x) Y_j(y).
double repro_kernel_basis(std::span<const double> x, std::span<const double> y, const HarmonicBasis& basis);

}  // namespace dunkl
