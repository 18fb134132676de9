#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dunkl {

/// Exact rational number (GMP-backed, always canonicalized).
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p/q", an integer, or a decimal literal.
///
/// Decimals are replaced by the best rational approximation whose
/// denominator does not exceed `max_den`. Throws std::invalid_argument on
/// malformed input.
Rational parse_rational(std::string_view text, std::int64_t max_den = 1000000);

/// Best rational approximation of `x` with denominator <= max_den
/// (continued-fraction convergents and semiconvergents).
Rational best_rational(double x, std::int64_t max_den);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), exact.
Rational pochhammer(const Rational& a, unsigned n);

Rational binomial(unsigned n, unsigned k);

}  // namespace dunkl
