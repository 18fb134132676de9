#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/kappa.hpp"
#include "dunkl/orthopoly.hpp"

namespace dunkl {

/// Result of a bound check: for each n, the largest ratio |quantity| / bound
/// over the samples, and the constant fitted as the running maximum.
struct BoundReport {
  std::string check;
  std::vector<std::pair<unsigned, double>> ratio_series;
  double fitted_c = 0.0;       // max ratio over every n
  double fitted_c_half = 0.0;  // max ratio over n <= n_max / 2
  double stability = 0.0;      // fitted_c / fitted_c_half
  double min_value = 0.0;      // smallest sampled quantity (sign checks)

  bool stable() const { return stability < 2.0; }
};

/// Fills fitted_c, fitted_c_half and stability from ratio_series.
void finish_report(BoundReport& report);

/// |P_n(t)| <= c n^{-1/2} (1 - t + n^{-2})^{-(alpha+1/2)/2} on a grid of t in [0, 1], n = 1..n_max.
BoundReport szego_check(const JacobiParams& jp, unsigned n_max, std::size_t grid = 201);

/// 0 <= k_n^delta(w_{alpha,beta}; t, 1) <= c n^{-1} (1 - t + n^{-2})^{-(alpha+3/2)}
/// on a grid of t in [-1, 1], n = 1..n_max. Requires delta >= alpha + beta + 2
/// and alpha, beta >= -1/2.
BoundReport knd_positivity_check(unsigned n_max, const JacobiParams& jp, double delta, std::size_t grid = 201);

/// Right-hand side of the simplex estimate without its constant:
///   n^{-(d-1)kappa-1/2} sum_i prod_{j != i} |x_j - x_i|^{-kappa} / (sqrt(1-|x_i|) + 1/n)^{alpha + 1/2 - (d-1)kappa}.
double estimate_rhs(unsigned n, const KappaParams& params, double alpha, std::span<const double> x);

/// max over samples of |int_T P_n^{(alpha,beta)}(<x,t>) t_ell (t_0...t_{d-1})^{kappa-1} dt| / estimate_rhs,
/// for each n in ns. Requires alpha >= beta and alpha >= (d-1) kappa - 1/2.
BoundReport estimate_check(std::span<const unsigned> ns, const KappaParams& params, double alpha, double beta,
                           std::size_t ell, std::span<const std::vector<double>> x_samples);

/// max over samples of |K_n^delta(x, e_ell)| divided by
///   n^{lambda-(d-1)kappa-delta} sum_i prod_{j != i} |x_j - x_i|^{-kappa} / (sqrt(1-|x_i|) + 1/n)^{lambda-(d-1)kappa+delta+1}
///   + n^{-1} V_kappa[(1 - <., e_ell> + n^{-2})^{-(lambda+1)}](x).
BoundReport kernel_bound_check(std::span<const unsigned> ns, double delta, std::size_t ell, const KappaParams& params,
                               std::span<const std::vector<double>> x_samples);

/// Uniformly distributed points on S^{d-1} from a seeded generator.
std::vector<std::vector<double>> random_sphere_points(std::size_t d, std::size_t count, std::uint64_t seed);

}  // namespace dunkl
