// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance <path-to-dunkl-cli> <scratch-dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dunkl/bessel.hpp"
#include "dunkl/bounds.hpp"
#include "dunkl/dunkl_ops.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/simplex_quadrature.hpp"
#include "dunkl/sphere.hpp"
#include "dunkl/summability.hpp"

using namespace dunkl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const Outcome& o, double secs) {
  char head[64];
  std::snprintf(head, sizeof head, "criterion %2d: %s", id, o.pass ? "PASS" : "FAIL");
  std::cout << head << "  (" << std::fixed;
  std::cout.precision(1);
  std::cout << secs << " s)  " << o.detail << "\n";
  std::cout.unsetf(std::ios::fixed);
  std::cout.precision(6);
  std::cout.flush();
  if (!o.pass) ++failures;
}

std::string sci(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.2e", v);
  return b;
}

std::string fix(double v, int digits = 4) {
  char b[32];
  std::snprintf(b, sizeof b, "%.*f", digits, v);
  return b;
}

std::vector<double> unit(std::size_t d, std::size_t i) {
  std::vector<double> e(d, 0.0);
  e[i] = 1.0;
  return e;
}

// ---------------------------------------------------------------- 1

Outcome criterion1() {
  Outcome o;
  std::size_t checked = 0, failed = 0;
  const auto t0 = Clock::now();
  for (std::size_t d : {2u, 3u, 4u, 5u}) {
    for (Rational kappa : {Rational(1, 2), Rational(1), Rational(2), Rational(5, 3)}) {
      const IntertwiningReport rep = verify_intertwining(8, KappaParams(d, kappa));
      checked += rep.checked;
      failed += rep.failures.size();
    }
  }
  const double secs = seconds_since(t0);
  o.pass = failed == 0 && secs < 60.0;
  o.detail = std::to_string(checked) + " exact identities, " + std::to_string(failed) + " failures, runtime " +
             fix(secs, 1) + " s (target < 60 s)";
  return o;
}

// ---------------------------------------------------------------- 2

Outcome criterion2() {
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Rational kappas[] = {Rational(1, 2), Rational(1), Rational(3, 2)};
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const KappaParams p(2, kappas[trial % 3]);
    const SimplexRule rule = build_rule(2, p.kappa_value(), 16);
    Polynomial f(2);
    for (unsigned a = 0; a <= 6; ++a) {
      for (unsigned b = 0; a + b <= 6; ++b) f.add_term(Monomial(std::vector<unsigned>{a, b}), Rational(coef(rng), den(rng)));
    }
    const Polynomial vf = vk_d2_exact(f, p);
    for (std::size_t i = 0; i < 2; ++i) {
      const Polynomial lhs = dunkl_apply(vf, i, p);
      const Polynomial di = partial_derivative(f, i);
      auto g = [&](double a, double b) { return di.evaluate(std::vector<double>{a, b}); };
      auto ff = [&](double a, double b) { return f.evaluate(std::vector<double>{a, b}); };
      for (int k = 0; k < 20; ++k) {
        const std::vector<double> x{u(rng), u(rng)};
        const double scale = std::max(1.0, std::fabs(lhs.evaluate(x)));
        worst = std::max(worst, std::fabs(lhs.evaluate(x) - vk_d2_generic(g, x, p, rule)) / scale);
        worst = std::max(worst, std::fabs(vf.evaluate(x) - vk_d2_generic(ff, x, p, rule)) / std::max(1.0, std::fabs(vf.evaluate(x))));
      }
    }
  }
  return {worst <= 1e-8, "20 polynomials x 20 points x 2 relations, max deviation " + sci(worst) + " (tol 1e-8)"};
}

// ---------------------------------------------------------------- 3

Outcome criterion3() {
  double worst_simplex = 0.0;
  for (std::size_t d : {2u, 3u, 4u}) {
    for (Rational kappa : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
      const SimplexRule rule = build_rule(d, kappa.get_d(), 8);
      for (unsigned n = 0; n <= 6; ++n) {
        for (const Monomial& m : monomials_of_degree(d, n)) {
          const double exact = dirichlet_moment(d, kappa, m.exponents).value;
          const double q = integrate(rule, [&](std::span<const double> t) { return m.evaluate(t); });
          worst_simplex = std::max(worst_simplex, std::fabs(q - exact) / exact);
        }
      }
    }
  }
  double worst_sphere = 0.0;
  for (std::size_t d : {2u, 3u}) {
    for (int k : {1, 2}) {
      const KappaParams p(d, Rational(k));
      const SphereRule s = build_sphere_rule_for(d, harmonic_sphere_order(0, p), k);
      worst_sphere = std::max(worst_sphere, std::fabs(s.mass() - sphere_area(d)) / sphere_area(d));
      const auto [closed, quad] = norm_const_a(p, s);
      worst_sphere = std::max(worst_sphere, std::fabs(1.0 / quad - 1.0 / closed) * closed);
    }
  }
  return {worst_simplex <= 1e-10 && worst_sphere <= 1e-8,
          "simplex moments max rel err " + sci(worst_simplex) + " (tol 1e-10); sphere area and 1/a_kappa max rel err " +
              sci(worst_sphere) + " (tol 1e-8)"};
}

// ---------------------------------------------------------------- 4

Outcome criterion4() {
  bool dims_ok = true;
  for (std::size_t d : {2u, 3u}) {
    for (Rational kappa : {Rational(1, 2), Rational(1), Rational(2)}) {
      for (unsigned n = 0; n <= 6; ++n) {
        const std::size_t expect = harmonic_dimension(n, d);
        try {
          if (hharmonic_nullspace(n, KappaParams(d, kappa)).size() != expect) dims_ok = false;
        } catch (const std::logic_error&) {
          dims_ok = false;
        }
      }
    }
  }
  const KappaParams p(3, Rational(1));
  double worst = 0.0;
  for (unsigned n = 0; n <= 4; ++n) {
    const std::size_t order = harmonic_sphere_order(n, p);
    const SphereRule sphere = build_sphere_rule(3, order);
    const HarmonicBasis basis = hharmonic_basis(n, p, sphere);
    const SimplexRule rule = build_rule(3, 1.0, default_simplex_order(n + 1));
    for (std::size_t ell = 0; ell < 3; ++ell) {
      std::vector<double> acc(basis.size(), 0.0);
      for (std::size_t k = 0; k < sphere.size(); ++k) {
        const auto x = sphere.node(k);
        const double h = hweight(x, p);
        const double kern = repro_kernel_axis(n, ell, x, p, rule);
        const auto y = basis.evaluate(x);
        for (std::size_t j = 0; j < y.size(); ++j) acc[j] += p.a() * sphere.weights[k] * kern * y[j] * h * h;
      }
      const auto ye = basis.evaluate(unit(3, ell));
      for (std::size_t j = 0; j < acc.size(); ++j) worst = std::max(worst, std::fabs(acc[j] - ye[j]));
    }
  }
  return {dims_ok && worst <= 1e-7, std::string("nullspace dimensions ") + (dims_ok ? "all match" : "MISMATCH") +
                                        "; reproducing property max deviation " + sci(worst) + " (tol 1e-7)"};
}

// ---------------------------------------------------------------- 5

Outcome criterion5() {
  const KappaParams p(3, Rational(1));
  const auto xs = random_sphere_points(3, 20, 505);
  double worst = 0.0;
  for (unsigned n = 0; n <= 4; ++n) {
    const HarmonicBasis basis = hharmonic_basis(n, p, build_sphere_rule(3, harmonic_sphere_order(n, p)));
    const SimplexRule rule = build_rule(3, 1.0, default_simplex_order(n + 1));
    for (std::size_t ell = 0; ell < 3; ++ell) {
      for (const auto& x : xs) {
        worst = std::max(worst, std::fabs(repro_kernel_axis(n, ell, x, p, rule) - repro_kernel_basis(x, unit(3, ell), basis)));
      }
    }
  }
  return {worst <= 1e-7, "n <= 4, every axis, 20 points: max deviation " + sci(worst) + " (tol 1e-7)"};
}

// ---------------------------------------------------------------- 6

Outcome criterion6() {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst2 = 0.0, worst3 = 0.0, worst0 = 0.0;
  for (double kappa : {0.5, 1.0, 1.5}) {
    const KappaParams p = KappaParams::from_double(2, kappa);
    const SimplexRule rule = build_rule(2, kappa, 48);
    for (int k = 0; k < 20; ++k) {
      const std::vector<double> x{u(rng), u(rng)}, y{u(rng), u(rng)};
      worst2 = std::max(worst2, std::abs(bessel_k2_closed(kappa, x, y).reconciled - bessel_k2_direct(x, y, p, rule)));
    }
    const std::vector<double> x{u(rng), u(rng)}, zero{0.0, 0.0};
    worst0 = std::max(worst0, std::abs(bessel_k2_closed(kappa, x, zero).reconciled - 1.0));
    worst0 = std::max(worst0, std::abs(bessel_k2_direct(x, zero, p, rule) - 1.0));
    worst0 = std::max(worst0, std::abs(bessel_k(zero, true, p, rule) - 1.0));
  }
  const KappaParams p3(3, Rational(1));
  const SimplexRule rule3 = build_rule(3, 1.0, 48);
  for (int k = 0; k < 20; ++k) {
    const std::vector<double> y{u(rng), u(rng), u(rng)};
    worst3 = std::max(worst3, std::abs(bessel_recursive(y, p3, 48).value - bessel_k(y, true, p3, rule3)));
  }
  const std::vector<double> zero3(3, 0.0);
  worst0 = std::max(worst0, std::abs(bessel_recursive(zero3, p3, 48).value - 1.0));
  worst0 = std::max(worst0, std::abs(bessel_k(zero3, true, p3, rule3) - 1.0));
  return {worst2 <= 1e-9 && worst3 <= 1e-9 && worst0 <= 1e-10,
          "d=2 closed vs direct " + sci(worst2) + ", d=3 recursion vs direct " + sci(worst3) + " (tol 1e-9); K(.,0)=1 " +
              sci(worst0) + " (tol 1e-10)"};
}

// ---------------------------------------------------------------- 7

Outcome criterion7() {
  const KappaParams p(3, Rational(1));
  const SimplexRule rule = build_rule(3, 1.0, 16);
  const SphereRule sphere = build_sphere_rule(3, 24);
  double worst = 0.0;
  const std::vector<std::function<double(double)>> fs{[](double) { return 1.0; }, [](double t) { return t; },
                                                      [](double t) { return t * t; },
                                                      [](double t) { return t * t * t * t; }};
  for (std::size_t ell = 0; ell < 3; ++ell) {
    for (double r : {0.4, 1.0}) {
      std::vector<double> x(3, 0.0);
      x[ell] = r;
      for (const auto& f : fs) {
        const auto [lhs, rhs] = vk_sphere_average(f, x, p, sphere, rule);
        worst = std::max(worst, std::fabs(lhs - rhs));
      }
    }
  }
  return {worst <= 1e-8, "f in {1, t, t^2, t^4}, x = r e_l: max |LHS - RHS| " + sci(worst) + " (tol 1e-8)"};
}

// ---------------------------------------------------------------- 8

Outcome criterion8(std::ostream& log) {
  const KappaParams p(3, Rational(1));
  const std::vector<double> deltas{1.0, 1.5, 2.0};
  LebesgueOptions opt;
  const CriticalSweep cs = critical_sweep(p, deltas, 200, 0, opt);
  const GrowthFit& g1 = cs.classes[0].fit;
  const GrowthFit& g15 = cs.classes[1].fit;
  const GrowthFit& g2 = cs.classes[2].fit;

  // Non-decreasing up to the quadrature error estimate of neighbouring rows.
  std::size_t drops = 0, drops_beyond_err = 0;
  double max_err = 0.0;
  const SweepRecord* prev = nullptr;
  for (const SweepRecord& r : cs.records) {
    if (r.delta != 1.5) continue;
    max_err = std::max(max_err, r.err_est);
    if (prev && r.n >= 50) {
      if (r.value < prev->value) {
        ++drops;
        if (prev->value - r.value > prev->err_est + r.err_est) ++drops_beyond_err;
      }
    }
    prev = &r;
  }

  const bool a = g2.classification == "bounded";
  const bool b = g1.classification == "growing" && g1.power_p > 0.2;
  const bool c = drops_beyond_err == 0 && g15.log_rss <= g15.bounded_rss;

  for (const auto& dc : cs.classes) {
    const GrowthFit& f = dc.fit;
    log << "    delta=" << dc.delta << ": " << f.classification << " (best " << f.best_model << "), log b=" << fix(f.log_b)
        << " se=" << sci(f.log_b_se) << ", power p=" << fix(f.power_p) << " se=" << sci(f.power_p_se)
        << ", rss bounded/log/power=" << sci(f.bounded_rss) << "/" << sci(f.log_rss) << "/" << sci(f.power_rss) << "\n";
  }
  for (double delta : deltas) {
    log << "    I_n at delta=" << delta << ":";
    for (const SweepRecord& r : cs.records) {
      if (r.delta == delta && (r.n == 50 || r.n == 100 || r.n == 150 || r.n == 200)) log << " n=" << r.n << " " << fix(r.value);
    }
    log << "\n";
  }
  std::string d = std::string("(a) delta=2 ") + g2.classification + (a ? " ok" : " [expected bounded]") +
                  "; (b) delta=1 " + g1.classification + " p=" + fix(g1.power_p, 3) + (b ? " ok" : " [expected growing, p>0.2]") +
                  "; (c) delta=1.5 drops " + std::to_string(drops) + " (beyond err_est " + std::to_string(drops_beyond_err) +
                  "), rss log " + sci(g15.log_rss) + " vs bounded " + sci(g15.bounded_rss) + (c ? " ok" : " [failed]");
  return {a && b && c, d};
}

// ---------------------------------------------------------------- 9

Outcome criterion9() {
  const KappaParams p(3, Rational(1));
  const double g = p.lambda() - 0.5;
  const auto xs = random_sphere_points(3, 16, 909);
  std::vector<unsigned> ns;
  for (unsigned n = 16; n <= 128; n += 16) ns.push_back(n);
  const BoundReport reps[] = {
      szego_check(JacobiParams(g, g), 128),
      knd_positivity_check(128, JacobiParams(g, g), 2 * g + 2),
      estimate_check(ns, p, g, g, 0, xs),
      kernel_bound_check(ns, p.critical_delta() + 0.5, 0, p, xs),
  };
  Outcome o;
  for (const BoundReport& r : reps) {
    o.pass = o.pass && r.stable();
    o.detail += r.check + " c=" + sci(r.fitted_c) + " ratio " + fix(r.stability, 3) + "; ";
  }
  o.detail += "(stable when ratio < 2)";
  return o;
}

// ---------------------------------------------------------------- 10

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Outcome criterion10(const std::string& cli, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> commands{
      {"verify", "verify --d 3 --kappa 5/3 --max-degree 6"},
      {"hbasis", "hbasis --d 3 --kappa 1 --n 3"},
      {"kernel", "kernel --d 3 --kappa 1 --n 4 --samples 5 --delta 1.5"},
      {"bessel", "bessel --d 3 --kappa 1/2 --y 0.5,-1.5,2"},
      {"lebesgue", "lebesgue --d 3 --kappa 1 --delta 1,2 --n-max 32 --workers 2"},
      {"bounds", "bounds --d 3 --kappa 1 --check estimate --n-max 64"},
  };
  Outcome o;
  int same = 0;
  for (const auto& [name, args] : commands) {
    std::string outs[2];
    for (int rep = 0; rep < 2; ++rep) {
      const auto file = dir / (name + "_" + std::to_string(rep) + ".out");
      const std::string cmd = "\"" + cli + "\" " + args + " > \"" + file.string() + "\"";
      if (std::system(cmd.c_str()) != 0) {
        o.pass = false;
        o.detail += name + " exited non-zero; ";
      }
      outs[rep] = slurp(file);
    }
    if (outs[0] == outs[1] && !outs[0].empty()) {
      ++same;
    } else {
      o.pass = false;
      o.detail += name + " differs; ";
    }
  }
  o.detail += std::to_string(same) + "/" + std::to_string(commands.size()) + " commands byte-identical across two runs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <dunkl-cli> <scratch-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::filesystem::path dir = argv[2];

  const std::vector<std::pair<int, std::function<Outcome()>>> plan{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5}, {6, criterion6}, {7, criterion7},
  };
  for (const auto& [id, fn] : plan) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    report(id, o, seconds_since(t0));
  }
  {
    const auto t0 = Clock::now();
    std::ostringstream log;
    Outcome o;
    try {
      o = criterion8(log);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    report(8, o, seconds_since(t0));
    std::cout << log.str();
  }
  {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criterion9();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    report(9, o, seconds_since(t0));
  }
  {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criterion10(cli, dir);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    report(10, o, seconds_since(t0));
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
