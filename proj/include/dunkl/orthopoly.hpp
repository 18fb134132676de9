#pragma once

#include <span>
#include <vector>

namespace dunkl {

/// Jacobi weight exponents for w(t) = (1-t)^alpha (1+t)^beta, both > -1.
struct JacobiParams {
  double alpha;
  double beta;

  JacobiParams(double alpha, double beta);
};

/// Cesaro (C, delta) order, delta > -1.
struct CesaroOrder {
  double delta;

  explicit CesaroOrder(double delta);
};

/// P_n^{(alpha,beta)}(t) by the forward three-term recurrence.
/// t must lie in [-1, 1] (a 1e-12 overshoot from roundoff is clamped).
double jacobi_eval(unsigned n, const JacobiParams& jp, double t);

/// Same recurrence without the domain check; for stencils and root finding.
double jacobi_eval_unchecked(unsigned n, double alpha, double beta, double t);

/// d/dt P_n^{(alpha,beta)}(t) = (n+alpha+beta+1)/2 P_{n-1}^{(alpha+1,beta+1)}(t).
double jacobi_derivative_unchecked(unsigned n, double alpha, double beta, double t);

/// P_n^{(alpha,beta)}(1) = (alpha+1)_n / n!.
double jacobi_at_one(unsigned n, const JacobiParams& jp);

/// Squared L^2 norm of P_n^{(alpha,beta)} against the (unnormalized) weight
/// (1-t)^alpha (1+t)^beta on [-1, 1].
double jacobi_h_norm(unsigned n, const JacobiParams& jp);

/// C_n^lambda(t) = (2 lambda)_n / (lambda + 1/2)_n P_n^{(lambda-1/2, lambda-1/2)}(t).
double gegenbauer_eval(unsigned n, double lambda, double t);

/// Z_n^lambda(t) = (n + lambda) / lambda C_n^lambda(t).
double zn_eval(unsigned n, double lambda, double t);

/// Weights C(n-k+delta, n-k) / C(n+delta, n), k = 0..n, applied to the
/// terms of a series.
std::vector<double> cesaro_term_weights(unsigned n, double delta);

/// Weights C(n-k+delta-1, n-k) / C(n+delta, n), k = 0..n, applied to the
/// partial sums. They sum to one.
std::vector<double> cesaro_partial_sum_weights(unsigned n, double delta);

/// How the kernel is scaled.
enum class KernelNormalization {
  /// h_k taken against w_{alpha,beta} itself (k_0 = 1/h_0).
  raw,
  /// h_k taken against the probability measure w / h_0, so k_0 = 1 and
  /// the kernel reproduces against w / h_0. This is the scaling that turns
  /// the Gegenbauer case into Cesaro means of Z_k^lambda.
  probability,
};

/// k_n^delta(w_{alpha,beta}; t, 1) =
///   C(n+delta,n)^{-1} sum_{k<=n} C(n-k+delta, n-k) P_k(t) P_k(1) / h_k.
double cesaro_kernel_endpoint(unsigned n, const JacobiParams& jp, const CesaroOrder& delta, double t,
                              KernelNormalization norm = KernelNormalization::raw);

/// Precomputed recurrence coefficients for evaluating every degree 0..N of
/// one Jacobi family at many points.
class JacobiFamily {
 public:
  JacobiFamily(unsigned max_degree, const JacobiParams& jp);

  unsigned max_degree() const { return max_degree_; }
  const JacobiParams& params() const { return jp_; }

  /// out[k] = P_k(t), k = 0..max_degree. out.size() must be max_degree + 1.
  void evaluate_all(double t, std::span<double> out) const;

  /// P_k(t) = (a_k t + b_k) P_{k-1}(t) - c_k P_{k-2}(t) for k >= 2;
  /// P_1(t) = a_1 t + b_1.
  double a(unsigned k) const { return a_[k]; }
  double b(unsigned k) const { return b_[k]; }
  double c(unsigned k) const { return c_[k]; }

 private:
  unsigned max_degree_;
  JacobiParams jp_;
  std::vector<double> a_, b_, c_;
};

/// max over a t-grid of | P_n^{(alpha+1,beta+1)}(t) - 2/(n+alpha+beta+2) P'_{n+1}^{(alpha,beta)}(t) |,
/// divided by max(1, max |P_n^{(alpha+1,beta+1)}|). The derivative uses an
/// eighth-order central difference stencil.
double jacobi_derivative_shift(unsigned n, const JacobiParams& jp);

}  // namespace dunkl
