#include "dunkl/gauss_jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "dunkl/orthopoly.hpp"

namespace dunkl {

double QuadratureRule1D::mass() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

QuadratureRule1D gauss_jacobi(std::size_t m, double alpha, double beta) {
  if (m == 0) throw std::invalid_argument("Gauss rule needs at least one node");
  if (!(alpha > -1.0) || !(beta > -1.0)) throw std::invalid_argument("Jacobi parameters must exceed -1");
  const double ab = alpha + beta;

  Eigen::VectorXd diag(m), sub(m > 1 ? m - 1 : 1);
  for (std::size_t k = 0; k < m; ++k) {
    const double kk = static_cast<double>(k);
    const double s = 2.0 * kk + ab;
    diag(k) = (k == 0) ? (beta - alpha) / (ab + 2.0) : (beta * beta - alpha * alpha) / (s * (s + 2.0));
    if (k + 1 < m) {
      const double n = kk + 1.0;
      const double t = 2.0 * n + ab;
      // n = 1 is written with the common factor (1 + a + b) cancelled.
      sub(k) = (k == 0) ? std::sqrt(4.0 * (1.0 + alpha) * (1.0 + beta) / (t * t * (t + 1.0)))
                        : std::sqrt(4.0 * n * (n + alpha) * (n + beta) * (n + ab) / (t * t * (t + 1.0) * (t - 1.0)));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(m > 1 ? m - 1 : 0), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Golub-Welsch eigenvalue solve failed");

  QuadratureRule1D rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  const double log_const = (ab + 1.0) * std::log(2.0) + std::lgamma(m + alpha + 1.0) + std::lgamma(m + beta + 1.0) -
                           std::lgamma(m + ab + 1.0) - std::lgamma(m + 1.0);
  const unsigned mm = static_cast<unsigned>(m);
  for (std::size_t i = 0; i < m; ++i) {
    double x = std::clamp(solver.eigenvalues()(static_cast<Eigen::Index>(i)), -1.0, 1.0);
    for (int it = 0; it < 3; ++it) {
      const double p = jacobi_eval_unchecked(mm, alpha, beta, x);
      const double dp = jacobi_derivative_unchecked(mm, alpha, beta, x);
      if (dp == 0.0) break;
      const double step = p / dp;
      if (!(std::fabs(step) < 1e-6)) break;
      x -= step;
      if (std::fabs(step) < 1e-16) break;
    }
    const double dp = jacobi_derivative_unchecked(mm, alpha, beta, x);
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(log_const) / ((1.0 - x) * (1.0 + x) * dp * dp);
  }
  return rule;
}

QuadratureRule1D gauss_jacobi_unit(std::size_t m, double a, double b) {
  // u = (1 + x) / 2 turns (1-x)^b (1+x)^a into 2^{a+b} u^a (1-u)^b, dx = 2 du.
  QuadratureRule1D rule = gauss_jacobi(m, b, a);
  const double scale = std::exp(-(a + b + 1.0) * std::log(2.0));
  for (std::size_t i = 0; i < rule.size(); ++i) {
    rule.nodes[i] = 0.5 * (1.0 + rule.nodes[i]);
    rule.weights[i] *= scale;
  }
  return rule;
}

}  // namespace dunkl
