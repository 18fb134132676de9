#include "dunkl/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "dunkl/intertwine.hpp"
#include "dunkl/simplex_quadrature.hpp"
#include "dunkl/summability.hpp"

namespace dunkl {

void finish_report(BoundReport& report) {
  if (report.ratio_series.empty()) return;
  const unsigned n_max = report.ratio_series.back().first;
  report.fitted_c = 0.0;
  report.fitted_c_half = 0.0;
  for (const auto& [n, r] : report.ratio_series) {
    report.fitted_c = std::max(report.fitted_c, r);
    if (2 * n <= n_max) report.fitted_c_half = std::max(report.fitted_c_half, r);
  }
  report.stability = report.fitted_c_half > 0.0 ? report.fitted_c / report.fitted_c_half
                                                : std::numeric_limits<double>::infinity();
}

BoundReport szego_check(const JacobiParams& jp, unsigned n_max, std::size_t grid) {
  if (grid < 2) throw std::invalid_argument("grid needs at least two points");
  BoundReport rep;
  rep.check = "szego";
  rep.min_value = std::numeric_limits<double>::infinity();
  for (unsigned n = 1; n <= n_max; ++n) {
    const double nn = n;
    double worst = 0.0;
    for (std::size_t g = 0; g < grid; ++g) {
      const double t = static_cast<double>(g) / static_cast<double>(grid - 1);
      const double p = jacobi_eval(n, jp, t);
      const double bound = std::pow(nn, -0.5) * std::pow(1.0 - t + 1.0 / (nn * nn), -(jp.alpha + 0.5) / 2.0);
      worst = std::max(worst, std::fabs(p) / bound);
      rep.min_value = std::min(rep.min_value, p);
    }
    rep.ratio_series.emplace_back(n, worst);
  }
  finish_report(rep);
  return rep;
}

BoundReport knd_positivity_check(unsigned n_max, const JacobiParams& jp, double delta, std::size_t grid) {
  if (jp.alpha < -0.5 || jp.beta < -0.5) throw std::invalid_argument("the positivity bound needs alpha, beta >= -1/2");
  if (delta < jp.alpha + jp.beta + 2.0) throw std::invalid_argument("the positivity bound needs delta >= alpha + beta + 2");
  if (grid < 2) throw std::invalid_argument("grid needs at least two points");
  const JacobiFamily family(n_max, jp);
  std::vector<double> scale(n_max + 1);
  for (unsigned k = 0; k <= n_max; ++k) scale[k] = jacobi_at_one(k, jp) / jacobi_h_norm(k, jp);
  std::vector<std::vector<double>> p(grid, std::vector<double>(n_max + 1));
  for (std::size_t g = 0; g < grid; ++g) {
    family.evaluate_all(-1.0 + 2.0 * static_cast<double>(g) / static_cast<double>(grid - 1), p[g]);
  }
  BoundReport rep;
  rep.check = "knd";
  rep.min_value = std::numeric_limits<double>::infinity();
  for (unsigned n = 1; n <= n_max; ++n) {
    const double nn = n;
    const std::vector<double> w = cesaro_term_weights(n, delta);
    double worst = 0.0;
    for (std::size_t g = 0; g < grid; ++g) {
      const double t = -1.0 + 2.0 * static_cast<double>(g) / static_cast<double>(grid - 1);
      double k = 0.0;
      for (unsigned j = 0; j <= n; ++j) k += w[j] * scale[j] * p[g][j];
      const double bound = std::pow(1.0 - t + 1.0 / (nn * nn), -(jp.alpha + 1.5)) / nn;
      worst = std::max(worst, std::fabs(k) / bound);
      rep.min_value = std::min(rep.min_value, k);
    }
    rep.ratio_series.emplace_back(n, worst);
  }
  finish_report(rep);
  return rep;
}

namespace {

// sum_i prod_{j != i} |x_j - x_i|^{-kappa} / (sqrt(1-|x_i|) + 1/n)^power
double axis_singular_sum(unsigned n, double kappa, double power, std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double prod = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j != i) prod *= std::pow(std::fabs(x[j] - x[i]), -kappa);
    }
    const double base = std::sqrt(std::max(0.0, 1.0 - std::fabs(x[i]))) + 1.0 / n;
    s += prod / std::pow(base, power);
  }
  return s;
}

}  // namespace

double estimate_rhs(unsigned n, const KappaParams& params, double alpha, std::span<const double> x) {
  const double k = params.kappa_value();
  const double dm1 = static_cast<double>(params.d()) - 1.0;
  return std::pow(static_cast<double>(n), -dm1 * k - 0.5) * axis_singular_sum(n, k, alpha + 0.5 - dm1 * k, x);
}

BoundReport estimate_check(std::span<const unsigned> ns, const KappaParams& params, double alpha, double beta,
                           std::size_t ell, std::span<const std::vector<double>> x_samples) {
  if (params.is_identity()) throw std::invalid_argument("the estimate needs kappa > 0");
  const double dm1 = static_cast<double>(params.d()) - 1.0;
  if (alpha < beta) throw std::invalid_argument("the estimate needs alpha >= beta");
  if (alpha < dm1 * params.kappa_value() - 0.5) throw std::invalid_argument("the estimate needs alpha >= (d-1) kappa - 1/2");
  if (ell >= params.d()) throw std::out_of_range("axis out of range");
  const JacobiParams jp(alpha, beta);
  BoundReport rep;
  rep.check = "estimate";
  rep.min_value = std::numeric_limits<double>::infinity();
  for (unsigned n : ns) {
    const SimplexRule rule = build_rule(params.d(), params.kappa_value(), default_simplex_order(n + 1));
    double worst = 0.0;
    for (const auto& x : x_samples) {
      const double lhs = std::fabs(integrate(rule, [&](std::span<const double> t) {
        double s = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i) s += x[i] * t[i];
        return jacobi_eval(n, jp, std::clamp(s, -1.0, 1.0)) * t[ell];
      }));
      worst = std::max(worst, lhs / estimate_rhs(n, params, alpha, x));
      rep.min_value = std::min(rep.min_value, lhs);
    }
    rep.ratio_series.emplace_back(n, worst);
  }
  finish_report(rep);
  return rep;
}

BoundReport kernel_bound_check(std::span<const unsigned> ns, double delta, std::size_t ell, const KappaParams& params,
                               std::span<const std::vector<double>> x_samples) {
  if (params.is_identity()) throw std::invalid_argument("the kernel bound needs kappa > 0");
  const CesaroOrder order(delta);
  const double k = params.kappa_value();
  const double lambda = params.lambda();
  const double gap = lambda - (static_cast<double>(params.d()) - 1.0) * k;
  BoundReport rep;
  rep.check = "kernel";
  rep.min_value = std::numeric_limits<double>::infinity();
  for (unsigned n : ns) {
    const double nn = n;
    const SimplexRule rule = build_rule(params.d(), k, default_simplex_order(n + 1));
    const AxisMoments engine(params, ell, n, &rule);
    const CesaroCoefficients coef(lambda, order.delta, n);
    std::vector<double> m(n + 1), kern(n + 1);
    const AxisFunction tail{ell, [&](double s) { return std::pow(1.0 - s + 1.0 / (nn * nn), -(lambda + 1.0)); }};
    double worst = 0.0;
    for (const auto& x : x_samples) {
      engine.moments(x, m);
      coef.kernels(m, kern);
      const double first = std::pow(nn, gap - order.delta) * axis_singular_sum(n, k, gap + order.delta + 1.0, x);
      const double second = vk_axis(tail, x, params, rule) / nn;
      worst = std::max(worst, std::fabs(kern[n]) / (first + second));
      rep.min_value = std::min(rep.min_value, kern[n]);
    }
    rep.ratio_series.emplace_back(n, worst);
  }
  finish_report(rep);
  return rep;
}

std::vector<std::vector<double>> random_sphere_points(std::size_t d, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::vector<double>> out;
  while (out.size() < count) {
    std::vector<double> x(d);
    double r2 = 0.0;
    for (double& v : x) {
      v = normal(gen);
      r2 += v * v;
    }
    if (r2 < 1e-20) continue;
    const double r = std::sqrt(r2);
    for (double& v : x) v /= r;
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace dunkl
