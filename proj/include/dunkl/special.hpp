#pragma once

#include <cmath>

namespace dunkl {

/// A real number stored as sign * exp(log_abs); zero has sign 0.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  double value() const;
  SignedLog operator*(const SignedLog& o) const { return {log_abs + o.log_abs, sign * o.sign}; }
  SignedLog operator/(const SignedLog& o) const { return {log_abs - o.log_abs, sign * o.sign}; }
};

/// log|Gamma(x)| with the sign of Gamma(x). Poles throw std::domain_error.
SignedLog log_gamma(double x);

/// (a)_n = Gamma(a+n)/Gamma(a) for real n >= 0, with sign tracking.
/// Handles a <= 0 integer arguments through the finite product when n is
/// a non-negative integer.
SignedLog log_pochhammer(double a, double n);

/// C(m + delta, m) = Gamma(m + delta + 1) / (Gamma(delta + 1) Gamma(m + 1)).
SignedLog log_binomial_shift(double m, double delta);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) comp_ += (sum_ - t) + v;
    else comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace dunkl
