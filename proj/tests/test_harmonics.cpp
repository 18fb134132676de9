#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/sphere.hpp"

using namespace dunkl;

namespace {

// int_S x^a dsigma = 2 prod Gamma((a_i+1)/2) / Gamma((|a|+d)/2) for even a, else 0.
double sphere_monomial(std::span<const unsigned> a) {
  double lg = 0.0;
  unsigned tot = 0;
  for (unsigned e : a) {
    if (e % 2) return 0.0;
    lg += std::lgamma((e + 1) / 2.0);
    tot += e;
  }
  return 2.0 * std::exp(lg - std::lgamma((tot + a.size()) / 2.0));
}

double integrate_sphere(const SphereRule& s, const std::function<double(std::span<const double>)>& f) {
  double acc = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) acc += s.weights[k] * f(s.node(k));
  return acc;
}

}  // namespace

TEST_CASE("product sphere rule integrates monomials exactly") {
  for (std::size_t d : {2u, 3u, 4u}) {
    for (std::size_t axis = 0; axis < d; ++axis) {
      const SphereRule s = build_sphere_rule(d, 10, SphereLayout::product, axis);
      CHECK(s.mass() == doctest::Approx(sphere_area(d)).epsilon(1e-13));
      for (unsigned n = 0; n <= 10; ++n) {
        for (const Monomial& m : monomials_of_degree(d, n)) {
          const double q = integrate_sphere(s, [&](std::span<const double> x) { return m.evaluate(x); });
          CHECK(q == doctest::Approx(sphere_monomial(m.exponents)).epsilon(1e-12).scale(1.0));
        }
      }
    }
  }
}

TEST_CASE("kink-split sphere rule: polynomials and non-smooth weights") {
  for (std::size_t d : {2u, 3u}) {
    const SphereRule s = build_sphere_rule(d, 30, SphereLayout::kink_split);
    CHECK(s.mass() == doctest::Approx(sphere_area(d)).epsilon(1e-12));
    for (const Monomial& m : monomials_of_degree(d, 6)) {
      const double q = integrate_sphere(s, [&](std::span<const double> x) { return m.evaluate(x); });
      CHECK(q == doctest::Approx(sphere_monomial(m.exponents)).epsilon(1e-11).scale(1.0));
    }
    // |x_1 - x_2| has a kink the split rule resolves.
    for (double kappa : {0.5, 1.5}) {
      const KappaParams p = KappaParams::from_double(d, kappa);
      const auto [closed, quad] = norm_const_a(p, s);
      CHECK(quad == doctest::Approx(closed).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(build_sphere_rule(4, 10, SphereLayout::kink_split), std::invalid_argument);
  CHECK_THROWS_AS(build_sphere_rule(5, 10), std::invalid_argument);
}

TEST_CASE("normalization constant by quadrature") {
  for (std::size_t d : {2u, 3u}) {
    for (int k : {1, 2}) {
      const KappaParams p(d, Rational(k));
      const SphereRule s = build_sphere_rule_for(d, 2 * k * d * d + 4, k);
      const auto [closed, quad] = norm_const_a(p, s);
      CHECK(quad == doctest::Approx(closed).epsilon(1e-12));
      CHECK(closed == doctest::Approx(p.a()));
    }
  }
}

TEST_CASE("h-harmonic nullspace: dimension and harmonicity") {
  for (std::size_t d : {2u, 3u}) {
    for (Rational kappa : {Rational(1, 2), Rational(1), Rational(2)}) {
      const KappaParams p(d, kappa);
      for (unsigned n = 0; n <= 6; ++n) {
        const auto basis = hharmonic_nullspace(n, p);
        CHECK(basis.size() == harmonic_dimension(n, d));
        for (const Polynomial& y : basis) {
          CHECK(y.is_homogeneous(n));
          CHECK(dunkl_laplacian(y, kappa).is_zero());
        }
      }
    }
  }
}

TEST_CASE("orthonormal basis under an independent sphere rule") {
  const KappaParams p(3, Rational(1));
  for (unsigned n : {1u, 2u, 3u, 4u}) {
    const HarmonicBasis b = hharmonic_basis(n, p, build_sphere_rule(3, harmonic_sphere_order(n, p)));
    CHECK(b.gram_residual < 1e-10);
    const SphereRule other = build_sphere_rule(3, harmonic_sphere_order(n, p) + 6, SphereLayout::product, 2);
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        const double g = p.a() * integrate_sphere(other, [&](std::span<const double> x) {
          const auto v = b.evaluate(x);
          const double h = hweight(x, p);
          return v[i] * v[j] * h * h;
        });
        CHECK(g == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10).scale(1.0));
      }
    }
  }
}

TEST_CASE("spaces of different degree are orthogonal") {
  const KappaParams p(3, Rational(2));
  const SphereRule s = build_sphere_rule(3, 30);
  const HarmonicBasis b2 = hharmonic_basis(2, p, s), b4 = hharmonic_basis(4, p, s);
  for (std::size_t i = 0; i < b2.size(); ++i) {
    for (std::size_t j = 0; j < b4.size(); ++j) {
      const double g = integrate_sphere(s, [&](std::span<const double> x) {
        const double h = hweight(x, p);
        return b2.evaluate(x)[i] * b4.evaluate(x)[j] * h * h;
      });
      CHECK(std::fabs(p.a() * g) < 1e-11);
    }
  }
}

TEST_CASE("reproducing kernel: simplex path equals the basis sum") {
  const KappaParams p(3, Rational(1));
  const SimplexRule rule = build_rule(3, 1.0, 12);
  std::mt19937_64 rng(1);
  for (unsigned n = 0; n <= 4; ++n) {
    const HarmonicBasis b = hharmonic_basis(n, p, build_sphere_rule(3, harmonic_sphere_order(n, p)));
    for (std::size_t ell = 0; ell < 3; ++ell) {
      std::vector<double> e(3, 0.0);
      e[ell] = 1.0;
      for (int k = 0; k < 3; ++k) {
        const auto x = oracle::sphere_point(3, rng);
        CHECK(repro_kernel_axis(n, ell, x, p, rule) == doctest::Approx(repro_kernel_basis(x, e, b)).epsilon(1e-9).scale(1.0));
      }
    }
  }
}

TEST_CASE("kappa = 0 gives ordinary zonal harmonics") {
  const KappaParams p(3, Rational(0));
  const SimplexRule unused = build_rule(3, 1.0, 2);
  const std::vector<double> x{0.6, 0.0, 0.8};
  // Z_n^{1/2}(t) = (2n+1) P_n(t) (Legendre).
  CHECK(repro_kernel_axis(2, 0, x, p, unused) == doctest::Approx(5.0 * (1.5 * 0.36 - 0.5)));
  // The circle: Z_n^0(cos t) = 2 cos(n t).
  const KappaParams c(2, Rational(0));
  const std::vector<double> y{std::cos(0.3), std::sin(0.3)};
  CHECK(repro_kernel_axis(3, 0, y, c, unused) == doctest::Approx(2 * std::cos(0.9)));
}

TEST_CASE("orthonormal json carries the floating coefficients") {
  const KappaParams p(2, Rational(1));
  const HarmonicBasis b = hharmonic_basis(3, p, build_sphere_rule(2, 20));
  const auto j = b.orthonormal_json(0);
  CHECK(j.at("d") == 2);
  CHECK(j.at("terms").size() >= 1);
}
