#include "dunkl/dunkl_ops.hpp"

#include <stdexcept>
#include <utility>

namespace dunkl {

namespace {

void check_axis(const Polynomial& p, std::size_t axis) {
  if (axis >= p.dimension()) throw std::out_of_range("axis out of range");
}

void check_pair(const Polynomial& p, std::size_t i, std::size_t j) {
  check_axis(p, i);
  check_axis(p, j);
  if (i == j) throw std::invalid_argument("transposition needs two distinct axes");
}

void check_params(const Polynomial& p, const KappaParams& params) {
  if (params.d() != p.dimension()) throw std::invalid_argument("polynomial dimension does not match KappaParams");
}

// Adds c * (x^m - x^{m o (i j)}) / (x_i - x_j) to out.
void add_divided_monomial(Polynomial& out, const Monomial& m, const Rational& c, std::size_t i, std::size_t j) {
  unsigned a = m[i], b = m[j];
  if (a == b) return;
  Rational sign = c;
  if (a < b) {
    // x_i^a x_j^b - x_i^b x_j^a = -(x_i^b x_j^a - x_i^a x_j^b)
    std::swap(a, b);
    sign = -c;
  }
  Monomial q = m;
  const unsigned gap = a - b;
  for (unsigned k = 0; k < gap; ++k) {
    q[i] = b + gap - 1 - k;
    q[j] = b + k;
    out.add_term(q, sign);
  }
}

}  // namespace

Polynomial partial_derivative(const Polynomial& p, std::size_t axis) {
  check_axis(p, axis);
  Polynomial out(p.dimension());
  for (const auto& [m, c] : p.terms()) {
    if (m[axis] == 0) continue;
    Monomial q = m;
    q[axis] -= 1;
    out.add_term(q, c * m[axis]);
  }
  return out;
}

Polynomial transposition_action(const Polynomial& p, std::size_t i, std::size_t j) {
  check_pair(p, i, j);
  Polynomial out(p.dimension());
  for (const auto& [m, c] : p.terms()) {
    Monomial q = m;
    std::swap(q[i], q[j]);
    out.add_term(q, c);
  }
  return out;
}

Polynomial divided_difference(const Polynomial& p, std::size_t i, std::size_t j) {
  check_pair(p, i, j);
  Polynomial out(p.dimension());
  for (const auto& [m, c] : p.terms()) add_divided_monomial(out, m, c, i, j);
  return out;
}

Polynomial dunkl_apply(const Polynomial& p, std::size_t axis, const Rational& kappa) {
  Polynomial out = partial_derivative(p, axis);
  if (kappa == 0) return out;
  Polynomial diff(p.dimension());
  for (std::size_t j = 0; j < p.dimension(); ++j) {
    if (j == axis) continue;
    for (const auto& [m, c] : p.terms()) add_divided_monomial(diff, m, c, axis, j);
  }
  diff *= kappa;
  out += diff;
  return out;
}

Polynomial dunkl_apply(const Polynomial& p, std::size_t axis, const KappaParams& params) {
  check_params(p, params);
  return dunkl_apply(p, axis, params.kappa());
}

Polynomial dunkl_laplacian(const Polynomial& p, const Rational& kappa) {
  Polynomial out(p.dimension());
  for (std::size_t i = 0; i < p.dimension(); ++i) out += dunkl_apply(dunkl_apply(p, i, kappa), i, kappa);
  return out;
}

Polynomial dunkl_laplacian(const Polynomial& p, const KappaParams& params) {
  check_params(p, params);
  return dunkl_laplacian(p, params.kappa());
}

}  // namespace dunkl
