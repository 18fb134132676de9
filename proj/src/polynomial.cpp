#include "dunkl/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dunkl {

unsigned Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

double Monomial::evaluate(std::span<const double> x) const {
  double v = 1.0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    for (unsigned k = 0; k < exponents[i]; ++k) v *= x[i];
  }
  return v;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(), a.exponents.begin(),
                                      a.exponents.end());
}

namespace {

void enumerate(std::size_t d, unsigned remaining, std::size_t pos, Monomial& cur, std::vector<Monomial>& out) {
  if (pos + 1 == d) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[pos] = e;
    enumerate(d, remaining - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t d, unsigned n) {
  if (d == 0) throw std::invalid_argument("dimension must be positive");
  std::vector<Monomial> out;
  Monomial cur(d);
  enumerate(d, n, 0, cur, out);
  return out;
}

Polynomial::Polynomial(std::size_t dimension) : dim_(dimension) {
  if (dimension == 0) throw std::invalid_argument("polynomial dimension must be positive");
}

Polynomial Polynomial::constant(std::size_t dimension, const Rational& c) {
  Polynomial p(dimension);
  p.add_term(Monomial(dimension), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dimension, std::size_t axis) {
  if (axis >= dimension) throw std::out_of_range("variable axis out of range");
  Monomial m(dimension);
  m[axis] = 1;
  return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.dimension());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

bool Polynomial::is_homogeneous(unsigned n) const {
  return std::all_of(terms_.begin(), terms_.end(), [n](const auto& t) { return t.first.degree() == n; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.dimension() != dim_) throw std::invalid_argument("monomial dimension mismatch");
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

double Polynomial::evaluate(std::span<const double> x) const {
  if (x.size() != dim_) throw std::invalid_argument("evaluation point has wrong dimension");
  double s = 0.0;
  for (const auto& [m, c] : terms_) s += c.get_d() * m.evaluate(x);
  return s;
}

void Polynomial::check_dimension(const Polynomial& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("polynomial dimension mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_dimension(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_dimension(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_dimension(b);
  Polynomial out(a.dim_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(a.dim_);
      for (std::size_t i = 0; i < a.dim_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return dim_ == other.dim_ && terms_ == other.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    const bool unit = mag == 1 && m.degree() > 0;
    if (!unit) os << mag.get_str();
    bool wrote = !unit;
    for (std::size_t i = 0; i < m.dimension(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << "x" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

nlohmann::json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("polynomial JSON: integer expected");
}

}  // namespace

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"exp", m.exponents},
                     {"num", integer_json(c.get_num())},
                     {"den", integer_json(c.get_den())}});
  }
  return {{"d", p.dimension()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  const auto d = j.at("d").get<std::size_t>();
  Polynomial p(d);
  for (const auto& t : j.at("terms")) {
    Monomial m(t.at("exp").get<std::vector<unsigned>>());
    if (m.dimension() != d) throw std::invalid_argument("polynomial JSON: exponent length mismatch");
    Rational c(integer_from_json(t.at("num")), integer_from_json(t.at("den")));
    if (c.get_den() == 0) throw std::invalid_argument("polynomial JSON: zero denominator");
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

}  // namespace dunkl
