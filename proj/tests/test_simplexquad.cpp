#include <cmath>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "dunkl/polynomial.hpp"
#include "dunkl/simplex_quadrature.hpp"

using namespace dunkl;

namespace {

double moment_oracle(std::size_t d, double kappa, std::span<const unsigned> a) {
  double lg = 0.0;
  unsigned tot = 0;
  for (unsigned e : a) {
    lg += std::lgamma(kappa + e);
    tot += e;
  }
  return std::exp(lg - std::lgamma(d * kappa + tot));
}

}  // namespace

TEST_CASE("Dirichlet moments: exact ratio and floating value") {
  const std::vector<unsigned> a{2, 0, 1};
  const DirichletMoment m = dirichlet_moment(3, Rational(1, 2), a);
  // (1/2)_2 (1/2)_0 (1/2)_1 / (3/2)_3 = (3/4)(1/2) / (3/2 * 5/2 * 7/2)
  CHECK(m.ratio == Rational(3, 8) / Rational(105, 8));
  CHECK(m.value == doctest::Approx(moment_oracle(3, 0.5, a)).epsilon(1e-13));
  CHECK(dirichlet_moment_value(3, 0.5, a) == doctest::Approx(moment_oracle(3, 0.5, a)).epsilon(1e-13));
  CHECK_THROWS_AS(dirichlet_moment(3, Rational(0), a), std::invalid_argument);
  CHECK_THROWS_AS(dirichlet_moment(2, Rational(1), a), std::invalid_argument);
}

TEST_CASE("simplex rule reproduces every moment it should") {
  for (std::size_t d : {2u, 3u, 4u}) {
    for (double kappa : {0.5, 1.0, 1.5, 2.0, 5.0 / 3.0}) {
      const SimplexRule rule = build_rule(d, kappa, 6);
      CHECK(rule.size() == static_cast<std::size_t>(std::pow(6, d - 1)));
      for (unsigned n = 0; n <= 8; ++n) {
        for (const Monomial& m : monomials_of_degree(d, n)) {
          const double q = integrate(rule, [&](std::span<const double> t) { return m.evaluate(t); });
          CHECK(q == doctest::Approx(moment_oracle(d, kappa, m.exponents)).epsilon(1e-11));
        }
      }
      CHECK(rule.mass() == doctest::Approx(dirichlet_mass(d, kappa)).epsilon(1e-12));
    }
  }
}

TEST_CASE("simplex nodes are barycentric") {
  const SimplexRule rule = build_rule(4, 0.5, 5);
  for (std::size_t k = 0; k < rule.size(); ++k) {
    double s = 0.0;
    for (double t : rule.node(k)) {
      CHECK(t > 0.0);
      s += t;
    }
    CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rule.weight(k) > 0.0);
  }
}

TEST_CASE("simplex rule against Monte-Carlo Dirichlet sampling") {
  // Smooth non-polynomial integrand; the Monte-Carlo standard error at 4e5
  // samples is below 2e-3 relative.
  for (std::size_t d : {2u, 3u, 4u}) {
    const double kappa = 0.75;
    const SimplexRule rule = build_rule(d, kappa, 20);
    auto g = [&](std::span<const double> t) {
      double s = 0.0;
      for (std::size_t i = 0; i < t.size(); ++i) s += (i + 1.0) * t[i];
      return std::cos(2.0 * s) + t[0] * t[0];
    };
    const double q = integrate(rule, g) / rule.mass();
    const double mc = oracle::dirichlet_mc(d, kappa, 400000, 99 + d, g);
    CHECK(q == doctest::Approx(mc).epsilon(6e-3));
  }
}

TEST_CASE("simplex rule argument checks") {
  CHECK_THROWS_AS(build_rule(1, 1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_rule(7, 1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_rule(3, 0.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_rule(3, 1.0, 0), std::invalid_argument);
  const SimplexRule rule = build_rule(2, 1.0, 4);
  CHECK_THROWS_AS(integrate(rule, [](std::span<const double>) { return std::nan(""); }), std::domain_error);
  CHECK(max_moment_error(rule, 7) < 1e-12);
  CHECK(max_moment_error(rule, 12) > 1e-8);
}

TEST_CASE("default simplex order covers the degree") {
  CHECK(default_simplex_order(10) == 32);
  CHECK(default_simplex_order(201) >= 101);
}

TEST_CASE("rule csv dump") {
  const SimplexRule rule = build_rule(3, 1.0, 2);
  std::ostringstream os;
  write_rule_csv(rule, os);
  const std::string s = os.str();
  CHECK(s.rfind("t0,t1,t2,weight\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 5);
}
