#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dunkl/growth.hpp"
#include "dunkl/kappa.hpp"
#include "dunkl/orthopoly.hpp"
#include "dunkl/polynomial.hpp"
#include "dunkl/simplex_quadrature.hpp"
#include "dunkl/sphere.hpp"

namespace dunkl {

/// One row of a Lebesgue-constant experiment.
struct SweepRecord {
  std::size_t d = 0;
  double kappa = 0.0;
  std::size_t ell = 0;  // 0-based
  double delta = 0.0;
  unsigned n = 0;
  double value = 0.0;
  double err_est = 0.0;
};

/// K_n^delta(h_kappa^2; x, e_ell) = c_kappa int_T k_n^delta(w_lambda; <x,t>, 1) t_ell (t_0 ... t_{d-1})^{kappa-1} dt
/// with k_n^delta in the probability normalization (K_0 = 1). Direct
/// evaluation: one endpoint kernel per simplex node.
double cesaro_kernel_axis(unsigned n, double delta, std::size_t ell, std::span<const double> x,
                          const KappaParams& params, const SimplexRule& rule);

/// Moments M_k(x) = c_kappa int_T P_k^{(lambda-1/2, lambda-1/2)}(<x,t>) t_ell (t_0 ... t_{d-1})^{kappa-1} dt
/// for k = 0..n_max in one pass over the simplex nodes. Every Cesaro kernel
/// K_n^delta(x, e_ell), n <= n_max, is a fixed combination of them.
class AxisMoments {
 public:
  /// `rule` may be null when kappa = 0 (V_kappa is then the identity).
  AxisMoments(const KappaParams& params, std::size_t ell, unsigned n_max, const SimplexRule* rule);

  unsigned n_max() const { return family_.max_degree(); }
  /// out.size() == n_max + 1.
  void moments(std::span<const double> x, std::span<double> out) const;

 private:
  std::size_t d_;
  std::size_t ell_;
  bool identity_;
  JacobiFamily family_;
  std::size_t padded_ = 0;
  std::vector<double> t_;  // d blocks of padded_ coordinates
  std::vector<double> w_;  // c_kappa * weight * t_ell, zero on padding
};

/// K_n^delta = sum_{k<=n} coef(n,k) M_k, with
/// coef(n,k) = C(n-k+delta, n-k) / C(n+delta, n) * P_k(1) h_0 / h_k.
class CesaroCoefficients {
 public:
  CesaroCoefficients(double lambda, double delta, unsigned n_max);
  double delta() const { return delta_; }
  /// out[n] = K_n^delta for n = 0..n_max.
  void kernels(std::span<const double> moments, std::span<double> out) const;

 private:
  double delta_;
  unsigned n_max_;
  std::vector<double> coef_;  // row n holds k = 0..n
};

/// Raised when a sweep is cancelled; completed rows are not returned.
class SweepCancelled : public std::runtime_error {
 public:
  SweepCancelled() : std::runtime_error("sweep cancelled") {}
};

struct LebesgueOptions {
  /// 0 selects default_lebesgue_sphere_order(n_max).
  std::size_t sphere_order = 0;
  /// 0 selects default_simplex_order(n_max + 1).
  std::size_t simplex_order = 0;
  unsigned workers = 1;
  /// Repeat the sweep on a sphere rule of about 3/4 the order and report the
  /// difference as err_est.
  bool error_estimate = true;
  std::function<void(std::size_t done, std::size_t total)> progress;
  const std::atomic<bool>* cancel = nullptr;
};

/// 3 n_max / 2 + 16.
std::size_t default_lebesgue_sphere_order(unsigned n_max);

/// Sphere rule used by the sweeps. For d = 3 it is the kink-split rule,
/// folded by the swap of the two coordinates other than ell; otherwise pole at
/// e_ell, kink-split when kappa is not an integer.
SphereRule lebesgue_sphere_rule(const KappaParams& params, std::size_t ell, std::size_t order);

/// I_n = a_kappa int_S |K_n^delta(x, e_ell)| h_kappa^2(x) dsigma(x) for every
/// delta in `deltas` and n = 1..n_max. Rows are ordered by delta, then n.
/// The result does not depend on the worker count.
std::vector<SweepRecord> lebesgue_sweep(const KappaParams& params, std::size_t ell, std::span<const double> deltas,
                                        unsigned n_max, const LebesgueOptions& options = {});

/// Single I_n on the given rules; err_est compares with a sphere rule of
/// about 3/4 the order in the same layout.
SweepRecord lebesgue_constant(unsigned n, double delta, std::size_t ell, const KappaParams& params,
                              const SphereRule& sphere, const SimplexRule* rule);

struct DeltaClassification {
  double delta = 0.0;
  GrowthFit fit;
};

struct CriticalSweep {
  double critical_delta = 0.0;
  /// lambda - min kappa_i for Z_2^d with every kappa_i = kappa; display only.
  double z2d_threshold = 0.0;
  std::vector<SweepRecord> records;
  std::vector<DeltaClassification> classes;
};

/// Lebesgue sweep plus growth classification on n in [n_max/4, n_max].
/// n_max < 64 is rejected.
CriticalSweep critical_sweep(const KappaParams& params, std::span<const double> deltas, unsigned n_max,
                             std::size_t ell, const LebesgueOptions& options = {});

/// lambda - min_i kappa_i for Z_2^d with all kappa_i equal to kappa.
double z2d_threshold(const KappaParams& params);

/// S_n^delta(h_kappa^2; f)(e_ell) = a_kappa int_S f(x) K_n^delta(x, e_ell) h_kappa^2(x) dsigma(x).
double cesaro_mean_at_axis(const Polynomial& f, unsigned n, double delta, std::size_t ell, const KappaParams& params,
                           const SimplexRule* rule, const SphereRule& sphere);

}  // namespace dunkl
