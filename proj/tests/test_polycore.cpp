#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/kappa.hpp"
#include "dunkl/polynomial.hpp"
#include "dunkl/rational.hpp"

using namespace dunkl;

namespace {

Polynomial var(std::size_t d, std::size_t i) { return Polynomial::variable(d, i); }

Polynomial random_poly(std::size_t d, unsigned max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, static_cast<int>(max_deg));
  Polynomial p(d);
  for (int k = 0; k < 6; ++k) {
    Monomial m(d);
    int left = deg(rng);
    for (std::size_t i = 0; i + 1 < d && left > 0; ++i) {
      std::uniform_int_distribution<int> part(0, left);
      m[i] = part(rng);
      left -= m[i];
    }
    m[d - 1] += left;
    p.add_term(m, Rational(coef(rng), 1 + (k % 3)));
  }
  return p;
}

// D_i f at a point straight from the definition, with d_i f by a central
// difference.
double dunkl_numeric(const Polynomial& f, std::size_t i, double kappa, std::vector<double> x) {
  const double h = 1e-5;
  auto xp = x, xm = x;
  xp[i] += h;
  xm[i] -= h;
  double v = (f.evaluate(xp) - f.evaluate(xm)) / (2 * h);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j == i) continue;
    auto xs = x;
    std::swap(xs[i], xs[j]);
    v += kappa * (f.evaluate(x) - f.evaluate(xs)) / (x[i] - x[j]);
  }
  return v;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("5/3") == Rational(5, 3));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("1.6666666666") == Rational(5, 3));
  CHECK(to_string(make_rational(10, 4)) == "5/2");
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK(best_rational(M_PI, 1000) == Rational(355, 113));
}

TEST_CASE("polynomial arithmetic and canonical form") {
  const std::size_t d = 3;
  Polynomial p = var(d, 0) * var(d, 0) + Rational(1, 2) * var(d, 1);
  Polynomial q = var(d, 0) - var(d, 2);
  Polynomial prod = p * q;
  CHECK(prod.degree() == 3);
  CHECK(prod.size() == 4);
  CHECK((prod - prod).is_zero());
  CHECK(p.is_homogeneous(2) == false);
  const std::vector<double> x{0.3, -1.2, 2.0};
  CHECK(prod.evaluate(x) == doctest::Approx(p.evaluate(x) * q.evaluate(x)).epsilon(1e-14));
  Polynomial zero = p + (-p);
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK_THROWS_AS(p + Polynomial(2), std::invalid_argument);
}

TEST_CASE("monomials of degree are complete and ordered") {
  const auto ms = monomials_of_degree(3, 4);
  CHECK(ms.size() == 15);
  for (std::size_t k = 1; k < ms.size(); ++k) CHECK(MonomialOrder{}(ms[k - 1], ms[k]));
  for (const auto& m : ms) CHECK(m.degree() == 4);
}

TEST_CASE("polynomial json round trip keeps exact coefficients") {
  std::mt19937_64 rng(7);
  Polynomial p = random_poly(4, 5, rng);
  p.add_term(Monomial(std::vector<unsigned>{1, 0, 0, 0}), Rational("123456789012345678901234567890/7"));
  const Polynomial back = polynomial_from_json(to_json(p));
  CHECK(back == p);
}

TEST_CASE("divided difference is exact") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial f = random_poly(3, 6, rng);
    const Polynomial q = divided_difference(f, 0, 2);
    // (x_0 - x_2) q == f - f o (0 2)
    CHECK((var(3, 0) - var(3, 2)) * q == f - transposition_action(f, 0, 2));
  }
}

TEST_CASE("Dunkl operator matches its definition at random points") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t d : {2u, 3u, 4u}) {
    const Rational kappa(2, 3);
    const Polynomial f = random_poly(d, 5, rng);
    for (std::size_t i = 0; i < d; ++i) {
      const Polynomial Df = dunkl_apply(f, i, kappa);
      std::vector<double> x(d);
      for (auto& v : x) v = u(rng);
      CHECK(Df.evaluate(x) == doctest::Approx(dunkl_numeric(f, i, kappa.get_d(), x)).epsilon(1e-6));
    }
  }
}

TEST_CASE("Dunkl operators commute") {
  std::mt19937_64 rng(5);
  const Rational kappa(5, 3);
  for (int trial = 0; trial < 5; ++trial) {
    const Polynomial f = random_poly(3, 6, rng);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        CHECK(dunkl_apply(dunkl_apply(f, j, kappa), i, kappa) == dunkl_apply(dunkl_apply(f, i, kappa), j, kappa));
      }
    }
  }
}

TEST_CASE("Dunkl Laplacian of |x|^2 is 2d + 2 kappa d (d-1)") {
  for (std::size_t d : {2u, 3u, 5u}) {
    Polynomial r2(d);
    for (std::size_t i = 0; i < d; ++i) r2 += var(d, i) * var(d, i);
    const Rational kappa(1, 2);
    const Polynomial lap = dunkl_laplacian(r2, kappa);
    const Rational expected = Rational(static_cast<long>(2 * d)) + 2 * kappa * Rational(static_cast<long>(d * (d - 1)));
    CHECK(lap == Polynomial::constant(d, expected));
  }
}

TEST_CASE("Dunkl operator at kappa = 0 is the partial derivative") {
  std::mt19937_64 rng(13);
  const Polynomial f = random_poly(3, 5, rng);
  for (std::size_t i = 0; i < 3; ++i) CHECK(dunkl_apply(f, i, Rational(0)) == partial_derivative(f, i));
}

TEST_CASE("kappa constants") {
  const KappaParams p(3, Rational(1));
  CHECK(p.lambda_exact() == Rational(7, 2));
  CHECK(p.critical_delta_exact() == Rational(3, 2));
  CHECK(p.c() == doctest::Approx(std::tgamma(4.0) / 1.0));

  const KappaParams q(4, Rational(1, 2));
  CHECK(q.lambda_exact() == Rational(4));
  CHECK(q.critical_delta_exact() == Rational(5, 2));

  CHECK(harmonic_dimension(0, 3) == 1);
  CHECK(harmonic_dimension(1, 3) == 3);
  CHECK(harmonic_dimension(4, 3) == 9);
  CHECK(harmonic_dimension(5, 2) == 2);
  CHECK(sphere_area(3) == doctest::Approx(4 * M_PI));

  // a_kappa against a fine trapezoid rule on the circle.
  for (double kappa : {0.5, 1.0, 2.0}) {
    const int m = 200000;
    double s = 0.0;
    for (int k = 0; k < m; ++k) {
      const double th = 2 * M_PI * (k + 0.5) / m;
      s += std::pow(std::fabs(std::cos(th) - std::sin(th)), 2 * kappa);
    }
    s *= 2 * M_PI / m;
    CHECK(norm_const_a_closed(2, kappa) == doctest::Approx(1.0 / s).epsilon(1e-8));
  }

  const KappaParams from_dec = KappaParams::from_double(3, 0.4);
  CHECK(from_dec.kappa() == Rational(2, 5));
  const KappaParams zero(3, Rational(0));
  CHECK(zero.is_identity());
}
