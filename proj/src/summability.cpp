#include "dunkl/summability.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <thread>

#include "dunkl/harmonics.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/special.hpp"

namespace dunkl {

namespace {

constexpr std::size_t kBlock = 64;
constexpr std::size_t kLanes = 4;
constexpr std::size_t kChunk = 32;

JacobiParams gegenbauer_jacobi(const KappaParams& params) {
  return JacobiParams(params.lambda() - 0.5, params.lambda() - 0.5);
}

}  // namespace

double cesaro_kernel_axis(unsigned n, double delta, std::size_t ell, std::span<const double> x,
                          const KappaParams& params, const SimplexRule& rule) {
  const JacobiParams jp = gegenbauer_jacobi(params);
  const CesaroOrder order(delta);
  auto k = [&](double s) {
    return cesaro_kernel_endpoint(n, jp, order, std::clamp(s, -1.0, 1.0), KernelNormalization::probability);
  };
  return vk_axis({ell, k}, x, params, rule);
}

AxisMoments::AxisMoments(const KappaParams& params, std::size_t ell, unsigned n_max, const SimplexRule* rule)
    : d_(params.d()), ell_(ell), identity_(params.is_identity()), family_(n_max, gegenbauer_jacobi(params)) {
  if (ell >= d_) throw std::out_of_range("axis out of range");
  if (identity_) return;
  if (rule == nullptr) throw std::invalid_argument("a simplex rule is required for kappa > 0");
  check_rule(*rule, params);
  const std::size_t m = rule->size();
  padded_ = (m + kBlock - 1) / kBlock * kBlock;
  t_.assign(d_ * padded_, 0.0);
  w_.assign(padded_, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    const auto t = rule->node(k);
    for (std::size_t i = 0; i < d_; ++i) t_[i * padded_ + k] = t[i];
    w_[k] = params.c() * rule->weight(k) * t[ell];
  }
}

void AxisMoments::moments(std::span<const double> x, std::span<double> out) const {
  const unsigned N = family_.max_degree();
  if (out.size() != N + 1) throw std::invalid_argument("moment span has wrong size");
  if (x.size() != d_) throw std::invalid_argument("point dimension mismatch");
  if (identity_) {
    family_.evaluate_all(std::clamp(x[ell_], -1.0, 1.0), out);
    return;
  }
  std::fill(out.begin(), out.end(), 0.0);
  std::array<double, kBlock> s, p0, p1;
  for (std::size_t b = 0; b < padded_; b += kBlock) {
    s.fill(0.0);
    for (std::size_t i = 0; i < d_; ++i) {
      const double* ti = t_.data() + i * padded_ + b;
      for (std::size_t j = 0; j < kBlock; ++j) s[j] += x[i] * ti[j];
    }
    const double* w = w_.data() + b;
    double acc0 = 0.0;
    for (std::size_t j = 0; j < kBlock; ++j) acc0 += w[j];
    out[0] += acc0;
    if (N == 0) continue;
    const double a1 = family_.a(1), b1 = family_.b(1);
    double acc1 = 0.0;
    for (std::size_t j = 0; j < kBlock; ++j) {
      p0[j] = 1.0;
      p1[j] = a1 * s[j] + b1;
      acc1 += w[j] * p1[j];
    }
    out[1] += acc1;
    for (unsigned k = 2; k <= N; ++k) {
      const double a = family_.a(k), bb = family_.b(k), c = family_.c(k);
      std::array<double, kLanes> acc{};
      for (std::size_t j = 0; j < kBlock; j += kLanes) {
        for (std::size_t l = 0; l < kLanes; ++l) {
          const double p2 = (a * s[j + l] + bb) * p1[j + l] - c * p0[j + l];
          p0[j + l] = p1[j + l];
          p1[j + l] = p2;
          acc[l] += w[j + l] * p2;
        }
      }
      out[k] += (acc[0] + acc[1]) + (acc[2] + acc[3]);
    }
  }
}

CesaroCoefficients::CesaroCoefficients(double lambda, double delta, unsigned n_max)
    : delta_(CesaroOrder(delta).delta), n_max_(n_max) {
  const JacobiParams jp(lambda - 0.5, lambda - 0.5);
  std::vector<double> scale(n_max + 1);
  const double h0 = jacobi_h_norm(0, jp);
  for (unsigned k = 0; k <= n_max; ++k) scale[k] = jacobi_at_one(k, jp) * h0 / jacobi_h_norm(k, jp);
  coef_.reserve(static_cast<std::size_t>(n_max + 1) * (n_max + 2) / 2);
  for (unsigned n = 0; n <= n_max; ++n) {
    const std::vector<double> w = cesaro_term_weights(n, delta_);
    for (unsigned k = 0; k <= n; ++k) coef_.push_back(w[k] * scale[k]);
  }
}

void CesaroCoefficients::kernels(std::span<const double> moments, std::span<double> out) const {
  if (moments.size() < n_max_ + 1 || out.size() != n_max_ + 1) throw std::invalid_argument("kernel span has wrong size");
  const double* row = coef_.data();
  for (unsigned n = 0; n <= n_max_; ++n) {
    double s = 0.0;
    for (unsigned k = 0; k <= n; ++k) s += row[k] * moments[k];
    out[n] = s;
    row += n + 1;
  }
}

std::size_t default_lebesgue_sphere_order(unsigned n_max) { return 3 * static_cast<std::size_t>(n_max) / 2 + 16; }

SphereRule lebesgue_sphere_rule(const KappaParams& params, std::size_t ell, std::size_t order) {
  if (params.d() != 3) return build_sphere_rule_for(params.d(), order, params.kappa_value(), ell);
  // The integrand is symmetric under swapping the two coordinates other than
  // ell, and so is the kink-split rule: keep one half with doubled weights.
  const SphereRule full = build_sphere_rule(3, order, SphereLayout::kink_split);
  const std::size_t a = ell == 0 ? 1 : 0, b = ell == 2 ? 1 : 2;
  SphereRule half = full;
  half.nodes.clear();
  half.weights.clear();
  for (std::size_t k = 0; k < full.size(); ++k) {
    const auto x = full.node(k);
    const double gap = x[a] - x[b];
    if (gap > 1e-13) continue;
    half.nodes.insert(half.nodes.end(), x.begin(), x.end());
    half.weights.push_back(gap < -1e-13 ? 2.0 * full.weights[k] : full.weights[k]);
  }
  if (std::fabs(half.mass() - full.mass()) > 1e-12 * full.mass()) throw std::logic_error("sphere rule is not symmetric");
  return half;
}

namespace {

// sum over sphere nodes of a_kappa w h^2 |K_n^delta| for every (delta, n),
// accumulated per fixed-size chunk and reduced in chunk order.
std::vector<double> sphere_pass(const KappaParams& params, const SphereRule& sphere, const AxisMoments& engine,
                                const std::vector<CesaroCoefficients>& coefs, const LebesgueOptions& options,
                                std::size_t done_before, std::size_t total_work) {
  const unsigned N = engine.n_max();
  const std::size_t width = coefs.size() * (N + 1);
  const std::size_t chunks = (sphere.size() + kChunk - 1) / kChunk;
  std::vector<std::vector<double>> partial(chunks);
  std::atomic<std::size_t> next{0}, finished{0};
  std::atomic<bool> stopped{false};

  auto work = [&]() {
    std::vector<double> m(N + 1), k(N + 1);
    while (true) {
      if (options.cancel && options.cancel->load()) {
        stopped = true;
        return;
      }
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      std::vector<double> acc(width, 0.0);
      const std::size_t end = std::min(sphere.size(), (c + 1) * kChunk);
      for (std::size_t p = c * kChunk; p < end; ++p) {
        const auto x = sphere.node(p);
        const double h = hweight(x, params);
        const double w = params.a() * sphere.weights[p] * h * h;
        if (w == 0.0) continue;
        engine.moments(x, m);
        for (std::size_t g = 0; g < coefs.size(); ++g) {
          coefs[g].kernels(m, k);
          double* row = acc.data() + g * (N + 1);
          for (unsigned n = 0; n <= N; ++n) row[n] += w * std::fabs(k[n]);
        }
      }
      partial[c] = std::move(acc);
      const std::size_t f = finished.fetch_add(1) + 1;
      if (options.progress) options.progress(done_before + std::min(end, f * kChunk), total_work);
    }
  };

  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (stopped) throw SweepCancelled();

  std::vector<CompensatedSum> sums(width);
  for (const auto& part : partial) {
    for (std::size_t i = 0; i < width; ++i) sums[i].add(part[i]);
  }
  std::vector<double> out(width);
  for (std::size_t i = 0; i < width; ++i) out[i] = sums[i].value();
  return out;
}

std::size_t coarse_order(std::size_t order) { return std::max<std::size_t>(4, (3 * order) / 4); }

}  // namespace

std::vector<SweepRecord> lebesgue_sweep(const KappaParams& params, std::size_t ell, std::span<const double> deltas,
                                        unsigned n_max, const LebesgueOptions& options) {
  if (ell >= params.d()) throw std::out_of_range("axis out of range");
  if (n_max == 0) throw std::invalid_argument("n_max must be >= 1");
  const std::size_t sphere_order = options.sphere_order ? options.sphere_order : default_lebesgue_sphere_order(n_max);
  const std::size_t simplex_order = options.simplex_order ? options.simplex_order : default_simplex_order(n_max + 1);

  std::optional<SimplexRule> rule;
  if (!params.is_identity()) rule = build_rule(params.d(), params.kappa_value(), simplex_order);
  const AxisMoments engine(params, ell, n_max, rule ? &*rule : nullptr);
  std::vector<CesaroCoefficients> coefs;
  for (double delta : deltas) coefs.emplace_back(params.lambda(), delta, n_max);

  const SphereRule fine = lebesgue_sphere_rule(params, ell, sphere_order);
  std::optional<SphereRule> coarse;
  if (options.error_estimate) coarse = lebesgue_sphere_rule(params, ell, coarse_order(sphere_order));
  const std::size_t total = fine.size() + (coarse ? coarse->size() : 0);

  const std::vector<double> main = sphere_pass(params, fine, engine, coefs, options, 0, total);
  std::vector<double> check;
  if (coarse) check = sphere_pass(params, *coarse, engine, coefs, options, fine.size(), total);

  std::vector<SweepRecord> rows;
  for (std::size_t g = 0; g < coefs.size(); ++g) {
    for (unsigned n = 1; n <= n_max; ++n) {
      SweepRecord r;
      r.d = params.d();
      r.kappa = params.kappa_value();
      r.ell = ell;
      r.delta = deltas[g];
      r.n = n;
      r.value = main[g * (n_max + 1) + n];
      r.err_est = coarse ? std::fabs(r.value - check[g * (n_max + 1) + n]) : 0.0;
      rows.push_back(r);
    }
  }
  return rows;
}

SweepRecord lebesgue_constant(unsigned n, double delta, std::size_t ell, const KappaParams& params,
                              const SphereRule& sphere, const SimplexRule* rule) {
  if (sphere.d != params.d()) throw std::invalid_argument("sphere rule dimension does not match params");
  const AxisMoments engine(params, ell, n, rule);
  const std::vector<CesaroCoefficients> coefs{CesaroCoefficients(params.lambda(), delta, n)};
  const LebesgueOptions options;
  const SphereRule coarse = build_sphere_rule(sphere.d, coarse_order(sphere.order), sphere.layout, sphere.pole_axis);
  const std::vector<double> main = sphere_pass(params, sphere, engine, coefs, options, 0, 0);
  const std::vector<double> check = sphere_pass(params, coarse, engine, coefs, options, 0, 0);
  SweepRecord r;
  r.d = params.d();
  r.kappa = params.kappa_value();
  r.ell = ell;
  r.delta = delta;
  r.n = n;
  r.value = main[n];
  r.err_est = std::fabs(main[n] - check[n]);
  return r;
}

double z2d_threshold(const KappaParams& params) { return params.lambda() - params.kappa_value(); }

CriticalSweep critical_sweep(const KappaParams& params, std::span<const double> deltas, unsigned n_max,
                             std::size_t ell, const LebesgueOptions& options) {
  if (n_max < 64) throw std::invalid_argument("critical sweep needs n_max >= 64");
  CriticalSweep out;
  out.critical_delta = params.critical_delta();
  out.z2d_threshold = z2d_threshold(params);
  out.records = lebesgue_sweep(params, ell, deltas, n_max, options);
  const unsigned lo = n_max / 4;
  for (std::size_t g = 0; g < deltas.size(); ++g) {
    std::vector<double> n, v;
    for (const SweepRecord& r : out.records) {
      if (r.delta == deltas[g] && r.n >= lo) {
        n.push_back(r.n);
        v.push_back(r.value);
      }
    }
    out.classes.push_back({deltas[g], classify_growth(n, v)});
  }
  return out;
}

double cesaro_mean_at_axis(const Polynomial& f, unsigned n, double delta, std::size_t ell, const KappaParams& params,
                           const SimplexRule* rule, const SphereRule& sphere) {
  const AxisMoments engine(params, ell, n, rule);
  const CesaroCoefficients coef(params.lambda(), delta, n);
  std::vector<double> m(n + 1), k(n + 1);
  CompensatedSum s;
  for (std::size_t p = 0; p < sphere.size(); ++p) {
    const auto x = sphere.node(p);
    const double h = hweight(x, params);
    engine.moments(x, m);
    coef.kernels(m, k);
    s.add(params.a() * sphere.weights[p] * h * h * f.evaluate(x) * k[n]);
  }
  return s.value();
}

}  // namespace dunkl
