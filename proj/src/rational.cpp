#include "dunkl/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace dunkl {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

Rational best_rational(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot approximate non-finite value");
  if (max_den < 1) throw std::invalid_argument("max_den must be positive");
  const bool negative = x < 0;
  double v = std::fabs(x);

  // Convergents p_k/q_k of the continued fraction of v.
  mpz_class p_prev = 0, p = 1, q_prev = 1, q = 0;
  double rem = v;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_d = std::floor(rem);
    const mpz_class a(static_cast<unsigned long>(a_d));
    mpz_class p_next = a * p + p_prev;
    mpz_class q_next = a * q + q_prev;
    if (q_next > max_den) {
      // Largest admissible semiconvergent; keep it only if it beats p/q.
      mpz_class t = (mpz_class(max_den) - q_prev) / q;
      mpz_class p_semi = t * p + p_prev;
      mpz_class q_semi = t * q + q_prev;
      if (q_semi > 0 && q > 0) {
        Rational semi(p_semi, q_semi), conv(p, q);
        semi.canonicalize();
        conv.canonicalize();
        const double e_semi = std::fabs(semi.get_d() - v);
        const double e_conv = std::fabs(conv.get_d() - v);
        if (e_semi < e_conv) {
          p = p_semi;
          q = q_semi;
        }
      }
      break;
    }
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    const double frac = rem - a_d;
    if (frac < 1e-15 * std::max(1.0, rem)) break;
    rem = 1.0 / frac;
  }
  Rational out(p, q);
  out.canonicalize();
  if (negative) out = -out;
  return out;
}

Rational parse_rational(std::string_view text, std::int64_t max_den) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    try {
      mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed rational '" + s + "'");
    }
  }
  const bool plain_integer =
      s.find_first_not_of("+-0123456789") == std::string::npos && s.find_first_of("0123456789") != std::string::npos;
  if (plain_integer) {
    if (s[0] == '+') s.erase(0, 1);
    return Rational(mpz_class(s));
  }
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed number '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("malformed number '" + s + "'");
  return best_rational(v, max_den);
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pochhammer(const Rational& a, unsigned n) {
  Rational out = 1;
  for (unsigned k = 0; k < n; ++k) out *= a + k;
  return out;
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

}  // namespace dunkl
