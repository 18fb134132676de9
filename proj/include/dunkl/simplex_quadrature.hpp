#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "dunkl/rational.hpp"
#include "dunkl/special.hpp"

namespace dunkl {

/// Integral of t^alpha (t_0 ... t_{d-1})^{kappa-1} over the homogeneous
/// simplex { t >= 0, sum t = 1 }:
///   prod_i Gamma(kappa + alpha_i) / Gamma(d kappa + |alpha|)
///     = ratio * Gamma(kappa)^d / Gamma(d kappa),
/// where ratio = prod_i (kappa)_{alpha_i} / (d kappa)_{|alpha|} is rational.
struct DirichletMoment {
  Rational ratio;
  double base = 0.0;   // Gamma(kappa)^d / Gamma(d kappa)
  double value = 0.0;  // ratio * base
};

DirichletMoment dirichlet_moment(std::size_t d, const Rational& kappa, std::span<const unsigned> alpha);

/// Floating-point moment for non-rational kappa.
double dirichlet_moment_value(std::size_t d, double kappa, std::span<const unsigned> alpha);

/// Gamma(kappa)^d / Gamma(d kappa).
double dirichlet_mass(std::size_t d, double kappa);

/// Tensor Gauss-Jacobi rule on the simplex for the Dirichlet weight
/// (t_0 ... t_{d-1})^{kappa-1}.
///
/// With t_1 = u_1, t_j = (1-u_1)...(1-u_{j-1}) u_j and t_0 = prod_j (1-u_j),
/// the weight times the Jacobian factors into prod_k u_k^{kappa-1} (1-u_k)^{(d-k) kappa - 1},
/// so axis k (1-based) carries its own Gauss-Jacobi rule on [0, 1].
class SimplexRule {
 public:
  SimplexRule(std::size_t d, double kappa, std::size_t order, std::vector<double> nodes, std::vector<double> weights);

  std::size_t d() const { return d_; }
  double kappa() const { return kappa_; }
  std::size_t order() const { return order_; }
  std::size_t size() const { return weights_.size(); }

  /// Homogeneous coordinates (t_0, ..., t_{d-1}) of node k.
  std::span<const double> node(std::size_t k) const { return {nodes_.data() + k * d_, d_}; }
  double weight(std::size_t k) const { return weights_[k]; }
  std::span<const double> weights() const { return weights_; }
  std::span<const double> flat_nodes() const { return nodes_; }
  double mass() const;

 private:
  std::size_t d_;
  double kappa_;
  std::size_t order_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Raised when the built rule fails to reproduce the closed-form moments.
class RuleValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds the tensor rule with `per_axis_order` nodes per axis and checks
/// it against dirichlet_moment for every monomial of degree <= 6 that the
/// order integrates exactly (relative tolerance 1e-10).
SimplexRule build_rule(std::size_t d, double kappa, std::size_t per_axis_order);

/// Same construction without the moment check.
SimplexRule build_rule_unchecked(std::size_t d, double kappa, std::size_t per_axis_order);

/// Largest relative deviation from dirichlet_moment over monomials of
/// degree <= max_degree.
double max_moment_error(const SimplexRule& rule, unsigned max_degree);

/// max(32, ceil(n/2) + 10): per-axis order for degree-n integrands along a
/// linear argument <x, t>.
std::size_t default_simplex_order(unsigned degree);

/// sum_k w_k g(t_k) with compensated summation in node order.
/// Throws std::domain_error when g is not finite at a node.
template <class F>
double integrate(const SimplexRule& rule, F&& g) {
  CompensatedSum sum;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const double v = g(rule.node(k));
    if (!std::isfinite(v)) throw std::domain_error("integrand is not finite at a quadrature node");
    sum.add(rule.weight(k) * v);
  }
  return sum.value();
}

/// CSV dump: one row per node, t_0..t_{d-1}, weight.
void write_rule_csv(const SimplexRule& rule, std::ostream& out);

}  // namespace dunkl
