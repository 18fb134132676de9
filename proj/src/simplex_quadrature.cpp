#include "dunkl/simplex_quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "dunkl/gauss_jacobi.hpp"
#include "dunkl/polynomial.hpp"

namespace dunkl {

DirichletMoment dirichlet_moment(std::size_t d, const Rational& kappa, std::span<const unsigned> alpha) {
  if (kappa <= 0) throw std::invalid_argument("Dirichlet moment requires kappa > 0");
  if (alpha.size() != d) throw std::invalid_argument("multi-index length must equal d");
  DirichletMoment m;
  Rational num = 1;
  unsigned total = 0;
  for (unsigned a : alpha) {
    num *= pochhammer(kappa, a);
    total += a;
  }
  m.ratio = num / pochhammer(Rational(static_cast<long>(d)) * kappa, total);
  m.base = dirichlet_mass(d, kappa.get_d());
  m.value = m.ratio.get_d() * m.base;
  return m;
}

double dirichlet_moment_value(std::size_t d, double kappa, std::span<const unsigned> alpha) {
  if (!(kappa > 0)) throw std::invalid_argument("Dirichlet moment requires kappa > 0");
  if (alpha.size() != d) throw std::invalid_argument("multi-index length must equal d");
  double log_v = 0.0;
  unsigned total = 0;
  for (unsigned a : alpha) {
    log_v += std::lgamma(kappa + a);
    total += a;
  }
  return std::exp(log_v - std::lgamma(static_cast<double>(d) * kappa + total));
}

double dirichlet_mass(std::size_t d, double kappa) {
  const double dd = static_cast<double>(d);
  return std::exp(dd * std::lgamma(kappa) - std::lgamma(dd * kappa));
}

SimplexRule::SimplexRule(std::size_t d, double kappa, std::size_t order, std::vector<double> nodes,
                         std::vector<double> weights)
    : d_(d), kappa_(kappa), order_(order), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.size() != d_ * weights_.size()) throw std::invalid_argument("node/weight size mismatch");
}

double SimplexRule::mass() const {
  CompensatedSum s;
  for (double w : weights_) s.add(w);
  return s.value();
}

std::size_t default_simplex_order(unsigned degree) {
  return std::max<std::size_t>(32, (degree + 1) / 2 + 10);
}

SimplexRule build_rule_unchecked(std::size_t d, double kappa, std::size_t per_axis_order) {
  if (d < 2) throw std::invalid_argument("simplex rule needs d >= 2");
  if (d > 6) throw std::invalid_argument("simplex rule supports d <= 6");
  if (!(kappa > 0)) throw std::invalid_argument("simplex rule needs kappa > 0");
  if (per_axis_order == 0) throw std::invalid_argument("per-axis order must be >= 1");

  const std::size_t axes = d - 1;
  std::vector<QuadratureRule1D> axis_rules;
  for (std::size_t k = 1; k <= axes; ++k) {
    axis_rules.push_back(gauss_jacobi_unit(per_axis_order, kappa - 1.0, static_cast<double>(d - k) * kappa - 1.0));
  }

  std::size_t count = 1;
  for (std::size_t k = 0; k < axes; ++k) count *= per_axis_order;
  std::vector<double> nodes(count * d), weights(count);
  std::vector<std::size_t> idx(axes, 0);
  for (std::size_t n = 0; n < count; ++n) {
    double w = 1.0;
    double remaining = 1.0;  // prod_{k < j} (1 - u_k)
    double* t = nodes.data() + n * d;
    for (std::size_t k = 0; k < axes; ++k) {
      const double u = axis_rules[k].nodes[idx[k]];
      w *= axis_rules[k].weights[idx[k]];
      t[k + 1] = remaining * u;
      remaining *= (1.0 - u);
    }
    t[0] = remaining;
    weights[n] = w;
    for (std::size_t k = axes; k-- > 0;) {
      if (++idx[k] < per_axis_order) break;
      idx[k] = 0;
    }
  }
  return SimplexRule(d, kappa, per_axis_order, std::move(nodes), std::move(weights));
}

double max_moment_error(const SimplexRule& rule, unsigned max_degree) {
  const std::size_t d = rule.d();
  double worst = 0.0;
  std::vector<double> powers;
  for (unsigned n = 0; n <= max_degree; ++n) {
    for (const Monomial& m : monomials_of_degree(d, n)) {
      const double exact = dirichlet_moment_value(d, rule.kappa(), m.exponents);
      const double approx = integrate(rule, [&](std::span<const double> t) { return m.evaluate(t); });
      worst = std::max(worst, std::fabs(approx - exact) / std::fabs(exact));
    }
  }
  return worst;
}

SimplexRule build_rule(std::size_t d, double kappa, std::size_t per_axis_order) {
  SimplexRule rule = build_rule_unchecked(d, kappa, per_axis_order);
  // Degree-q monomials in t are degree <= q in every u_k, so Gauss exactness
  // 2m - 1 >= q is enough.
  const unsigned exact_degree = static_cast<unsigned>(std::min<std::size_t>(6, 2 * per_axis_order - 1));
  const double err = max_moment_error(rule, exact_degree);
  if (!(err <= 1e-10)) {
    throw RuleValidationError("simplex rule failed moment validation (max relative error " + std::to_string(err) + ")");
  }
  return rule;
}

void write_rule_csv(const SimplexRule& rule, std::ostream& out) {
  out.precision(17);
  for (std::size_t j = 0; j < rule.d(); ++j) out << "t" << j << ",";
  out << "weight\n";
  for (std::size_t k = 0; k < rule.size(); ++k) {
    for (double v : rule.node(k)) out << v << ",";
    out << rule.weight(k) << "\n";
  }
}

}  // namespace dunkl
