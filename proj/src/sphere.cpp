#include "dunkl/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "dunkl/gauss_jacobi.hpp"

namespace dunkl {

double SphereRule::mass() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

namespace {

constexpr double pi = std::numbers::pi;

// Local coordinates: component 0 is the pole.
SphereRule product_local(std::size_t d, std::size_t order) {
  SphereRule r;
  r.d = d;
  r.order = order;
  if (d == 2) {
    const std::size_t m = order + 1;
    for (std::size_t j = 0; j < m; ++j) {
      const double th = 2.0 * pi * static_cast<double>(j) / static_cast<double>(m);
      r.nodes.push_back(std::cos(th));
      r.nodes.push_back(std::sin(th));
      r.weights.push_back(2.0 * pi / static_cast<double>(m));
    }
    return r;
  }
  const double a = (static_cast<double>(d) - 3.0) / 2.0;
  const QuadratureRule1D s_rule = gauss_jacobi(order / 2 + 1, a, a);
  const SphereRule sub = product_local(d - 1, order);
  for (std::size_t i = 0; i < s_rule.size(); ++i) {
    const double s = s_rule.nodes[i];
    const double c = std::sqrt(std::max(0.0, 1.0 - s * s));
    for (std::size_t k = 0; k < sub.size(); ++k) {
      r.nodes.push_back(s);
      for (double y : sub.node(k)) r.nodes.push_back(c * y);
      r.weights.push_back(s_rule.weights[i] * sub.weights[k]);
    }
  }
  return r;
}

QuadratureRule1D legendre_on(std::size_t m, double lo, double hi) {
  QuadratureRule1D g = gauss_legendre(m);
  for (std::size_t i = 0; i < m; ++i) {
    g.nodes[i] = lo + (hi - lo) * 0.5 * (1.0 + g.nodes[i]);
    g.weights[i] *= 0.5 * (hi - lo);
  }
  return g;
}

SphereRule kink_split(std::size_t d, std::size_t order) {
  SphereRule r;
  r.d = d;
  r.order = order;
  if (d == 2) {
    for (int arc = 0; arc < 2; ++arc) {
      const double lo = pi / 4.0 + arc * pi;
      const QuadratureRule1D g = legendre_on(order + 1, lo, lo + pi);
      for (std::size_t i = 0; i < g.size(); ++i) {
        r.nodes.push_back(std::cos(g.nodes[i]));
        r.nodes.push_back(std::sin(g.nodes[i]));
        r.weights.push_back(g.weights[i]);
      }
    }
    return r;
  }
  if (d != 3) throw std::invalid_argument("kink-split sphere rule is only available for d = 2, 3");
  const double p[3] = {1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0)};
  const double u[3] = {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
  const double v[3] = {1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0), -2.0 / std::sqrt(6.0)};
  // Every +-e_i sits at polar angle acos(+-1/sqrt 3) on a sector boundary.
  const double th1 = std::acos(1.0 / std::sqrt(3.0));
  const double cuts[4] = {0.0, th1, pi - th1, pi};
  const std::size_t per_piece = order / 3 + 2;
  for (int piece = 0; piece < 3; ++piece) {
    const QuadratureRule1D theta = legendre_on(per_piece, cuts[piece], cuts[piece + 1]);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      const double ct = std::cos(theta.nodes[i]), st = std::sin(theta.nodes[i]);
      for (int sector = 0; sector < 6; ++sector) {
        const double lo = pi / 6.0 + sector * pi / 3.0;
        const QuadratureRule1D g = legendre_on(per_piece, lo, lo + pi / 3.0);
        for (std::size_t k = 0; k < g.size(); ++k) {
          const double cp = std::cos(g.nodes[k]), sp = std::sin(g.nodes[k]);
          for (int c = 0; c < 3; ++c) r.nodes.push_back(ct * p[c] + st * (cp * u[c] + sp * v[c]));
          r.weights.push_back(theta.weights[i] * st * g.weights[k]);
        }
      }
    }
  }
  return r;
}

}  // namespace

SphereRule build_sphere_rule(std::size_t d, std::size_t order, SphereLayout layout, std::size_t pole_axis) {
  if (d < 2 || d > 4) throw std::invalid_argument("sphere rules are available for d = 2, 3, 4");
  if (pole_axis >= d) throw std::out_of_range("pole axis out of range");
  if (layout == SphereLayout::kink_split) {
    SphereRule r = kink_split(d, order);
    r.layout = layout;
    return r;
  }
  SphereRule local = product_local(d, order);
  if (pole_axis == 0) return local;
  // Move local component 0 to pole_axis, keeping the others in order.
  SphereRule r = local;
  for (std::size_t k = 0; k < local.size(); ++k) {
    const auto src = local.node(k);
    double* dst = r.nodes.data() + k * d;
    std::size_t next = 1;
    for (std::size_t j = 0; j < d; ++j) dst[j] = (j == pole_axis) ? src[0] : src[next++];
  }
  r.pole_axis = pole_axis;
  return r;
}

SphereRule build_sphere_rule_for(std::size_t d, std::size_t order, double kappa, std::size_t pole_axis) {
  const bool smooth = std::floor(kappa) == kappa;
  if (smooth || d > 3) return build_sphere_rule(d, order, SphereLayout::product, pole_axis);
  return build_sphere_rule(d, order, SphereLayout::kink_split, pole_axis);
}

}  // namespace dunkl
