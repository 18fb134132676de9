#include "dunkl/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dunkl {

double SignedLog::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

SignedLog log_gamma(double x) {
  if (x <= 0 && x == std::floor(x)) throw std::domain_error("Gamma has a pole at non-positive integers");
  int sign = 1;
  const double l = ::lgamma_r(x, &sign);
  return {l, sign};
}

SignedLog log_pochhammer(double a, double n) {
  if (n < 0) throw std::invalid_argument("pochhammer order must be non-negative");
  const bool integer_n = n == std::floor(n);
  const bool a_pole = a <= 0 && a == std::floor(a);
  const bool end_pole = (a + n) <= 0 && (a + n) == std::floor(a + n);
  if ((a_pole || end_pole) && integer_n) {
    SignedLog out{0.0, 1};
    for (long k = 0; k < static_cast<long>(n); ++k) {
      const double f = a + static_cast<double>(k);
      if (f == 0) return {-std::numeric_limits<double>::infinity(), 0};
      out.log_abs += std::log(std::fabs(f));
      if (f < 0) out.sign = -out.sign;
    }
    return out;
  }
  return log_gamma(a + n) / log_gamma(a);
}

SignedLog log_binomial_shift(double m, double delta) {
  if (delta <= -1) throw std::invalid_argument("binomial shift requires delta > -1");
  return log_gamma(m + delta + 1.0) / (log_gamma(delta + 1.0) * log_gamma(m + 1.0));
}

}  // namespace dunkl
