#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dunkl {

/// How nodes are laid out on the sphere.
enum class SphereLayout {
  /// Pole along pole_axis; x = (s, sqrt(1-s^2) y) recursively with a
  /// Gauss-Jacobi rule in s and a trapezoid rule on the final circle.
  /// Exact for polynomials of degree <= order.
  product,
  /// For weights with kinks on the planes x_i = x_j (2 kappa odd).
  /// d = 2: Gauss-Legendre on the two arcs cut by x_1 = x_2.
  /// d = 3: pole along (1,1,1)/sqrt 3, Gauss-Legendre in the polar angle and
  /// on each of the six azimuthal sectors cut by the planes x_i = x_j.
  kink_split,
};

/// Quadrature rule on S^{d-1} for the surface measure.
struct SphereRule {
  std::size_t d = 0;
  std::size_t order = 0;
  SphereLayout layout = SphereLayout::product;
  std::size_t pole_axis = 0;
  std::vector<double> nodes;  // flat, d per node
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  std::span<const double> node(std::size_t k) const { return {nodes.data() + k * d, d}; }
  double mass() const;
};

/// d in {2, 3, 4}. pole_axis (0-based) only affects the product layout.
SphereRule build_sphere_rule(std::size_t d, std::size_t order, SphereLayout layout = SphereLayout::product,
                             std::size_t pole_axis = 0);

/// product layout when kappa is an integer (h_kappa^2 is then a polynomial),
/// kink_split otherwise for d <= 3.
SphereRule build_sphere_rule_for(std::size_t d, std::size_t order, double kappa, std::size_t pole_axis = 0);

}  // namespace dunkl
