#include "dunkl/intertwine.hpp"

#include <cmath>
#include <stdexcept>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/gauss_jacobi.hpp"
#include "dunkl/harmonics.hpp"

namespace dunkl {

void check_rule(const SimplexRule& rule, const KappaParams& params) {
  if (rule.d() != params.d()) throw std::invalid_argument("simplex rule dimension does not match params");
  if (std::fabs(rule.kappa() - params.kappa_value()) > 1e-14 * std::max(1.0, params.kappa_value())) {
    throw std::invalid_argument("simplex rule kappa does not match params");
  }
}

double vk_axis(const AxisFunction& F, std::span<const double> x, const KappaParams& params, const SimplexRule& rule) {
  const std::size_t d = params.d();
  if (x.size() != d) throw std::invalid_argument("point dimension does not match params");
  if (F.axis >= d) throw std::out_of_range("axis out of range");
  if (params.is_identity()) return F.profile(x[F.axis]);
  check_rule(rule, params);
  const double v = integrate(rule, [&](std::span<const double> t) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) s += x[i] * t[i];
    return F.profile(s) * t[F.axis];
  });
  return params.c() * v;
}

Polynomial vk_monomial_exact(unsigned n, std::size_t axis, const KappaParams& params) {
  const std::size_t d = params.d();
  if (axis >= d) throw std::out_of_range("axis out of range");
  const Rational& k = params.kappa();
  const Rational denom = pochhammer(Rational(static_cast<long>(d)) * k + 1, n);
  Rational n_fact = 1;
  for (unsigned j = 2; j <= n; ++j) n_fact *= j;
  Polynomial out(d);
  for (const Monomial& m : monomials_of_degree(d, n)) {
    Rational c = n_fact;
    for (std::size_t i = 0; i < d; ++i) {
      for (unsigned j = 2; j <= m[i]; ++j) c /= j;
      c *= pochhammer(i == axis ? k + 1 : k, m[i]);
      if (c == 0) break;
    }
    if (c != 0) out.add_term(m, c / denom);
  }
  return out;
}

IntertwiningReport verify_intertwining(unsigned n_max, const KappaParams& params) {
  IntertwiningReport report;
  const std::size_t d = params.d();
  for (std::size_t ell = 0; ell < d; ++ell) {
    std::vector<Polynomial> v;
    for (unsigned n = 0; n <= n_max; ++n) v.push_back(vk_monomial_exact(n, ell, params));
    for (unsigned n = 0; n <= n_max; ++n) {
      for (std::size_t i = 0; i < d; ++i) {
        const Polynomial lhs = dunkl_apply(v[n], i, params);
        Polynomial rhs(d);
        if (i == ell && n > 0) rhs = v[n - 1] * Rational(n);
        ++report.checked;
        if (!(lhs == rhs)) report.failures.push_back({d, params.kappa(), ell, n, i});
      }
    }
  }
  return report;
}

double vk_d2_generic(const std::function<double(double, double)>& f, std::span<const double> x,
                     const KappaParams& params, const SimplexRule& rule) {
  if (params.d() != 2) throw std::invalid_argument("the generic representation needs d = 2");
  if (x.size() != 2) throw std::invalid_argument("point must have two coordinates");
  if (params.is_identity()) return f(x[0], x[1]);
  check_rule(rule, params);
  const double v = integrate(rule, [&](std::span<const double> t) {
    return f(x[0] * t[0] + x[1] * t[1], x[0] * t[1] + x[1] * t[0]) * t[0];
  });
  return params.c() * v;
}

Polynomial vk_d2_exact(const Polynomial& f, const KappaParams& params) {
  if (params.d() != 2 || f.dimension() != 2) throw std::invalid_argument("the generic representation needs d = 2");
  const Rational& k = params.kappa();
  Polynomial out(2);
  for (const auto& [mono, coef] : f.terms()) {
    const unsigned a = mono[0], b = mono[1];
    for (unsigned i = 0; i <= a; ++i) {
      for (unsigned j = 0; j <= b; ++j) {
        // x_1^{i+j} x_2^{a-i+b-j} t_0^{i+b-j} t_1^{a-i+j}
        const unsigned p = i + b - j, q = a - i + j;
        const Rational moment = pochhammer(k + 1, p) * pochhammer(k, q) / pochhammer(2 * k + 1, p + q);
        if (moment == 0) continue;
        Monomial m(2);
        m[0] = i + j;
        m[1] = a - i + b - j;
        out.add_term(m, coef * binomial(a, i) * binomial(b, j) * moment);
      }
    }
  }
  return out;
}

double vk_z2d(const std::function<double(std::span<const double>)>& f, std::span<const double> x,
              std::span<const double> kappas, std::size_t order) {
  const std::size_t d = x.size();
  if (kappas.size() != d) throw std::invalid_argument("one kappa per coordinate is required");
  if (order == 0) throw std::invalid_argument("order must be >= 1");
  std::vector<QuadratureRule1D> axes(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (kappas[i] < 0) throw std::invalid_argument("kappa_i must be non-negative");
    if (kappas[i] == 0) {
      axes[i].nodes = {1.0};
      axes[i].weights = {1.0};
      continue;
    }
    axes[i] = gauss_jacobi(order, kappas[i] - 1.0, kappas[i]);
    const double mass = axes[i].mass();
    for (double& w : axes[i].weights) w /= mass;
  }
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size();
  std::vector<double> y(d);
  CompensatedSum sum;
  for (std::size_t n = 0; n < total; ++n) {
    std::size_t rest = n;
    double w = 1.0;
    for (std::size_t i = d; i-- > 0;) {
      const std::size_t j = rest % axes[i].size();
      rest /= axes[i].size();
      y[i] = x[i] * axes[i].nodes[j];
      w *= axes[i].weights[j];
    }
    sum.add(w * f(y));
  }
  return sum.value();
}

std::pair<double, double> vk_sphere_average(const std::function<double(double)>& f, std::span<const double> x,
                                            const KappaParams& params, const SphereRule& sphere,
                                            const SimplexRule& rule) {
  const std::size_t d = params.d();
  if (x.size() != d || sphere.d != d) throw std::invalid_argument("dimension mismatch");
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  const double r = std::sqrt(r2);

  std::function<double(std::span<const double>)> v_at;
  if (d == 2) {
    const double x0 = x[0], x1 = x[1];
    v_at = [&, x0, x1](std::span<const double> y) {
      return vk_d2_generic([&](double a, double b) { return f(x0 * a + x1 * b); }, y, params, rule);
    };
  } else {
    std::size_t axis = d;
    for (std::size_t i = 0; i < d; ++i) {
      if (std::fabs(x[i]) > 1e-14 * std::max(1.0, r)) {
        if (axis != d) throw std::invalid_argument("for d > 2, x must be a multiple of a coordinate vector");
        axis = i;
      }
    }
    if (axis == d) axis = 0;
    const double scale = x[axis];
    v_at = [&, axis, scale](std::span<const double> y) {
      return vk_axis({axis, [&](double s) { return f(scale * s); }}, y, params, rule);
    };
  }
  CompensatedSum lhs;
  for (std::size_t k = 0; k < sphere.size(); ++k) {
    const auto y = sphere.node(k);
    const double h = hweight(y, params);
    lhs.add(sphere.weights[k] * h * h * v_at(y));
  }

  const QuadratureRule1D g = gauss_gegenbauer(std::max<std::size_t>(32, sphere.order + 2), params.lambda());
  CompensatedSum rhs;
  for (std::size_t i = 0; i < g.size(); ++i) rhs.add(g.weights[i] * f(r * g.nodes[i]));
  return {params.a() * lhs.value(), rhs.value() / g.mass()};
}

}  // namespace dunkl
