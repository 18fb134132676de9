#pragma once

#include <cstddef>
#include <vector>

namespace dunkl {

/// One-dimensional quadrature rule: sum_i weights[i] g(nodes[i]).
struct QuadratureRule1D {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  double mass() const;
};

/// m-point Gauss-Jacobi rule for (1-x)^alpha (1+x)^beta on [-1, 1].
///
/// Nodes come from the eigenvalues of the Jacobi matrix (Golub-Welsch),
/// polished by Newton steps on P_m; weights use the closed form
///   w_i = 2^{a+b+1} Gamma(m+a+1) Gamma(m+b+1) / (Gamma(m+a+b+1) m! (1-x_i^2) P'_m(x_i)^2).
/// Exact for polynomials of degree <= 2m - 1.
QuadratureRule1D gauss_jacobi(std::size_t m, double alpha, double beta);

/// Gauss rule on [0, 1] for the weight u^a (1-u)^b.
QuadratureRule1D gauss_jacobi_unit(std::size_t m, double a, double b);

inline QuadratureRule1D gauss_legendre(std::size_t m) { return gauss_jacobi(m, 0.0, 0.0); }

/// Gauss rule for (1 - t^2)^{lambda - 1/2} on [-1, 1].
inline QuadratureRule1D gauss_gegenbauer(std::size_t m, double lambda) {
  return gauss_jacobi(m, lambda - 0.5, lambda - 0.5);
}

}  // namespace dunkl
