#include "dunkl/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/orthopoly.hpp"

namespace dunkl {

double hweight(std::span<const double> x, const KappaParams& params) {
  if (params.is_identity()) return 1.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) prod *= std::fabs(x[i] - x[j]);
  }
  return std::pow(prod, params.kappa_value());
}

std::pair<double, double> norm_const_a(const KappaParams& params, const SphereRule& sphere) {
  if (sphere.d != params.d()) throw std::invalid_argument("sphere rule dimension does not match params");
  CompensatedSum s;
  for (std::size_t k = 0; k < sphere.size(); ++k) {
    const double h = hweight(sphere.node(k), params);
    s.add(sphere.weights[k] * h * h);
  }
  return {params.a(), 1.0 / s.value()};
}

std::size_t harmonic_sphere_order(unsigned n, const KappaParams& params) {
  const double d = static_cast<double>(params.d());
  const double weight_degree = std::ceil(params.kappa_value() * d * (d - 1.0));
  return 2 * n + static_cast<std::size_t>(weight_degree) + 2;
}

namespace {

// Floating copy of a polynomial for repeated evaluation.
struct DenseEval {
  std::vector<std::vector<unsigned>> exps;
  std::vector<double> coefs;

  explicit DenseEval(const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) {
      exps.push_back(m.exponents);
      coefs.push_back(c.get_d());
    }
  }
  double operator()(std::span<const double> x) const {
    double s = 0.0;
    for (std::size_t t = 0; t < coefs.size(); ++t) {
      double v = coefs[t];
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (unsigned k = 0; k < exps[t][i]; ++k) v *= x[i];
      }
      s += v;
    }
    return s;
  }
};

}  // namespace

std::vector<Polynomial> hharmonic_nullspace(unsigned n, const KappaParams& params) {
  const std::size_t d = params.d();
  const std::vector<Monomial> cols = monomials_of_degree(d, n);
  std::vector<Polynomial> out;
  if (n < 2) {
    for (const Monomial& m : cols) out.push_back(Polynomial::monomial(m));
  } else {
    const std::vector<Monomial> rows = monomials_of_degree(d, n - 2);
    const std::size_t R = rows.size(), C = cols.size();
    std::vector<std::vector<Rational>> a(R, std::vector<Rational>(C));
    for (std::size_t j = 0; j < C; ++j) {
      const Polynomial lap = dunkl_laplacian(Polynomial::monomial(cols[j]), params);
      for (std::size_t i = 0; i < R; ++i) a[i][j] = lap.coefficient(rows[i]);
    }
    // Reduced row echelon form.
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
      std::size_t p = r;
      while (p < R && a[p][c] == 0) ++p;
      if (p == R) continue;
      std::swap(a[p], a[r]);
      const Rational inv = 1 / a[r][c];
      for (std::size_t k = c; k < C; ++k) a[r][k] *= inv;
      for (std::size_t i = 0; i < R; ++i) {
        if (i == r || a[i][c] == 0) continue;
        const Rational f = a[i][c];
        for (std::size_t k = c; k < C; ++k) a[i][k] -= f * a[r][k];
      }
      pivot_col.push_back(c);
      ++r;
    }
    std::vector<bool> is_pivot(C, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t f = 0; f < C; ++f) {
      if (is_pivot[f]) continue;
      Polynomial y = Polynomial::monomial(cols[f]);
      for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        if (a[i][f] != 0) y.add_term(cols[pivot_col[i]], -a[i][f]);
      }
      out.push_back(std::move(y));
    }
  }
  if (out.size() != harmonic_dimension(n, d)) {
    throw std::logic_error("h-harmonic nullspace has dimension " + std::to_string(out.size()) + ", expected " +
                           std::to_string(harmonic_dimension(n, d)));
  }
  return out;
}

HarmonicBasis hharmonic_basis(unsigned n, const KappaParams& params, const SphereRule& sphere) {
  if (sphere.d != params.d()) throw std::invalid_argument("sphere rule dimension does not match params");
  HarmonicBasis b;
  b.n = n;
  b.d = params.d();
  b.kappa = params.kappa();
  b.spanning = hharmonic_nullspace(n, params);
  const std::size_t m = b.spanning.size();

  std::vector<DenseEval> evals;
  for (const Polynomial& p : b.spanning) evals.emplace_back(p);
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  std::vector<double> v(m);
  for (std::size_t k = 0; k < sphere.size(); ++k) {
    const auto y = sphere.node(k);
    const double h = hweight(y, params);
    const double w = params.a() * sphere.weights[k] * h * h;
    for (std::size_t i = 0; i < m; ++i) v[i] = evals[i](y);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j <= i; ++j) gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += w * v[i] * v[j];
    }
  }
  gram = gram.selfadjointView<Eigen::Lower>();

  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) throw std::runtime_error("Gram matrix is not positive definite; raise the sphere order");
  const Eigen::MatrixXd L = llt.matrixL();
  const Eigen::MatrixXd T =
      L.triangularView<Eigen::Lower>().solve(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)));
  const Eigen::MatrixXd check = T * gram * T.transpose() - Eigen::MatrixXd::Identity(T.rows(), T.cols());
  b.gram_residual = check.cwiseAbs().maxCoeff();
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(gram, Eigen::EigenvaluesOnly).eigenvalues();
  b.gram_condition = ev.maxCoeff() / ev.minCoeff();
  b.transform.assign(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) b.transform[i][j] = T(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  return b;
}

std::vector<double> HarmonicBasis::evaluate(std::span<const double> x) const {
  const std::size_t m = size();
  std::vector<double> raw(m), out(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) raw[i] = spanning[i].evaluate(x);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i <= j; ++i) out[j] += transform[j][i] * raw[i];
  }
  return out;
}

nlohmann::json HarmonicBasis::orthonormal_json(std::size_t j) const {
  std::map<Monomial, double, MonomialOrder> terms;
  for (std::size_t i = 0; i <= j; ++i) {
    for (const auto& [m, c] : spanning[i].terms()) terms[m] += transform[j][i] * c.get_d();
  }
  nlohmann::json out;
  out["d"] = d;
  out["terms"] = nlohmann::json::array();
  for (const auto& [m, c] : terms) {
    if (c == 0.0) continue;
    out["terms"].push_back({{"exp", m.exponents}, {"coef", c}});
  }
  return out;
}

double repro_kernel_axis(unsigned n, std::size_t ell, std::span<const double> x, const KappaParams& params,
                         const SimplexRule& rule) {
  const std::size_t d = params.d();
  if (x.size() != d) throw std::invalid_argument("point dimension does not match params");
  if (ell >= d) throw std::out_of_range("axis out of range");
  const double lambda = params.lambda();
  auto z = [n, lambda](double t) {
    if (lambda == 0.0) return n == 0 ? 1.0 : 2.0 * std::cos(n * std::acos(std::clamp(t, -1.0, 1.0)));
    return zn_eval(n, lambda, std::clamp(t, -1.0, 1.0));
  };
  return vk_axis({ell, z}, x, params, rule);
}

double repro_kernel_basis(std::span<const double> x, std::span<const double> y, const HarmonicBasis& basis) {
  const std::vector<double> a = basis.evaluate(x), b = basis.evaluate(y);
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

}  // namespace dunkl
