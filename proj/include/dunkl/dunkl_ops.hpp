#pragma once

#include <cstddef>

#include "dunkl/kappa.hpp"
#include "dunkl/polynomial.hpp"

namespace dunkl {

// Axes are zero-based throughout the library: axis i refers to x_{i+1}.

Polynomial partial_derivative(const Polynomial& p, std::size_t axis);

/// p(x (i j)): variables i and j exchanged.
Polynomial transposition_action(const Polynomial& p, std::size_t i, std::size_t j);

/// (p - p o (i j)) / (x_i - x_j), computed term by term with
///   x_i^a x_j^b - x_i^b x_j^a = (x_i - x_j) x_i^b x_j^b sum_{k<a-b} x_i^{a-b-1-k} x_j^k   (a > b)
/// so the quotient is exact.
Polynomial divided_difference(const Polynomial& p, std::size_t i, std::size_t j);

/// D_i p = d_i p + kappa sum_{j != i} (p - p o (i j)) / (x_i - x_j).
Polynomial dunkl_apply(const Polynomial& p, std::size_t axis, const Rational& kappa);
Polynomial dunkl_apply(const Polynomial& p, std::size_t axis, const KappaParams& params);

/// sum_i D_i^2 p.
Polynomial dunkl_laplacian(const Polynomial& p, const Rational& kappa);
Polynomial dunkl_laplacian(const Polynomial& p, const KappaParams& params);

}  // namespace dunkl
