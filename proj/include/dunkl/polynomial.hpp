#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "dunkl/rational.hpp"

namespace dunkl {

/// Exponent vector x^a = x_0^{a_0} ... x_{d-1}^{a_{d-1}}.
struct Monomial {
  std::vector<unsigned> exponents;

  Monomial() = default;
  explicit Monomial(std::size_t d) : exponents(d, 0) {}
  explicit Monomial(std::vector<unsigned> e) : exponents(std::move(e)) {}

  std::size_t dimension() const { return exponents.size(); }
  unsigned degree() const;
  double evaluate(std::span<const double> x) const;

  unsigned operator[](std::size_t i) const { return exponents[i]; }
  unsigned& operator[](std::size_t i) { return exponents[i]; }

  bool operator==(const Monomial&) const = default;
};

/// Graded order: total degree first, then lexicographically descending
/// exponents (x_0 before x_1). This is the canonical term order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All exponent vectors of total degree n in d variables, in canonical order.
std::vector<Monomial> monomials_of_degree(std::size_t d, unsigned n);

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal iff
/// their term maps are equal.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  explicit Polynomial(std::size_t dimension);

  static Polynomial constant(std::size_t dimension, const Rational& c);
  static Polynomial variable(std::size_t dimension, std::size_t axis);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);

  std::size_t dimension() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Highest total degree, or -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(unsigned n) const;

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  double evaluate(std::span<const double> x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  bool operator==(const Polynomial& other) const;

  std::string to_string() const;

 private:
  void check_dimension(const Polynomial& other) const;

  std::size_t dim_;
  TermMap terms_;
};

/// {"d": int, "terms": [{"exp": [...], "num": int, "den": int}]} in
/// canonical term order. Numerators and denominators that do not fit in a
/// 64-bit integer are emitted as decimal strings.
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace dunkl
