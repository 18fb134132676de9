#include "dunkl/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "dunkl/bessel.hpp"
#include "dunkl/bounds.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/kappa.hpp"
#include "dunkl/summability.hpp"

namespace dunkl {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::size_t d = 0;
  std::string kappa;
  std::string out;
  std::string format = "auto";
  std::uint64_t seed = 20240611;
  unsigned workers = 1;
  std::size_t simplex_order = 0;
  std::size_t sphere_order = 0;
  double tol = 0.0;  // 0 selects the per-command default
};

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--d", cfg.d, "dimension")->required()->check(CLI::Range(2, 6));
  sub->add_option("--kappa", cfg.kappa, "multiplicity, p/q or decimal")->required();
  sub->add_option("--out", cfg.out, "output file (.csv or .json); stdout when omitted");
  sub->add_option("--format", cfg.format, "json, csv or auto")->check(CLI::IsMember({"auto", "json", "csv"}));
  sub->add_option("--seed", cfg.seed, "seed for random sample points");
  sub->add_option("--workers", cfg.workers, "worker threads")->envname("DUNKL_WORKERS")->check(CLI::Range(1u, 256u));
  sub->add_option("--simplex-order", cfg.simplex_order, "per-axis simplex rule order (0 = automatic)");
  sub->add_option("--quad-order,--sphere-order", cfg.sphere_order, "sphere rule order (0 = automatic)");
  sub->add_option("--tol", cfg.tol, "pass/fail tolerance (0 = command default)")->check(CLI::NonNegativeNumber);
}

KappaParams make_params(const RunConfig& cfg) {
  Rational k;
  try {
    k = parse_rational(cfg.kappa);
  } catch (const std::invalid_argument&) {
    throw UsageError("cannot parse --kappa '" + cfg.kappa + "'");
  }
  if (k < 0) throw UsageError("--kappa must be >= 0");
  if (cfg.kappa.find('/') != std::string::npos || cfg.kappa.find_first_of(".eE") == std::string::npos) {
    return KappaParams(cfg.d, k);
  }
  return KappaParams::from_double(cfg.d, std::stod(cfg.kappa));
}

void require_positive_kappa(const KappaParams& p, const char* what) {
  if (p.is_identity()) throw UsageError(std::string(what) + " needs --kappa > 0");
}

Json config_json(const std::string& command, const RunConfig& cfg, const KappaParams& p) {
  Json j;
  j["version"] = DUNKL_VERSION;
  j["command"] = command;
  j["d"] = cfg.d;
  j["kappa"] = to_string(p.kappa());
  j["kappa_value"] = p.kappa_value();
  j["seed"] = cfg.seed;
  j["workers"] = cfg.workers;
  j["simplex_order"] = cfg.simplex_order;
  j["sphere_order"] = cfg.sphere_order;
  j["tol"] = cfg.tol;
  return j;
}

std::string resolve_format(const RunConfig& cfg, const std::string& fallback) {
  if (cfg.format != "auto") return cfg.format;
  const auto ends = [&](const char* ext) {
    const std::string e(ext);
    return cfg.out.size() >= e.size() && cfg.out.compare(cfg.out.size() - e.size(), e.size(), e) == 0;
  };
  if (ends(".csv")) return "csv";
  if (ends(".json")) return "json";
  return fallback;
}

/// Single writer: the chosen file, or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::out | std::ios::trunc);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& os() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv_header(std::ostream& os, const Json& config) {
  for (const auto& [k, v] : config.items()) os << "# " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

void write_json(Sink& sink, const Json& j) { sink.os() << j.dump(2) << "\n"; }

std::vector<double> point_from_flag(const std::string& given, std::size_t d) {
  std::vector<double> x = parse_number_list(given);
  if (x.size() != d) throw UsageError("--x needs exactly d coordinates");
  return x;
}

std::size_t axis_from_flag(int ell, std::size_t d) {
  if (ell < 1 || static_cast<std::size_t>(ell) > d) throw UsageError("--ell must lie in 1..d");
  return static_cast<std::size_t>(ell - 1);
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, unsigned max_degree, std::ostream& out) {
  const KappaParams p = make_params(cfg);
  const IntertwiningReport rep = verify_intertwining(max_degree, p);
  Json j;
  Json c = config_json("verify", cfg, p);
  c["max_degree"] = max_degree;
  j["config"] = c;
  j["passed"] = rep.passed();
  j["checked"] = rep.checked;
  Json failed = Json::array();
  for (const auto& f : rep.failures) {
    failed.push_back({{"d", f.d}, {"kappa", to_string(f.kappa)}, {"ell", f.ell + 1}, {"n", f.n}, {"i", f.i + 1}});
  }
  j["failed"] = failed;
  Sink sink(cfg.out, out);
  write_json(sink, j);
  return rep.passed() ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------- hbasis

int cmd_hbasis(const RunConfig& cfg, unsigned n, std::ostream& out) {
  const KappaParams p = make_params(cfg);
  if (p.d() > 4) throw UsageError("hbasis supports d <= 4");
  const std::size_t order = cfg.sphere_order ? cfg.sphere_order : harmonic_sphere_order(n, p);
  const SphereRule sphere = build_sphere_rule_for(p.d(), order, p.kappa_value());
  const HarmonicBasis basis = hharmonic_basis(n, p, sphere);
  const double tol = cfg.tol > 0 ? cfg.tol : 1e-8;
  Json j;
  Json c = config_json("hbasis", cfg, p);
  c["n"] = n;
  c["sphere_order_used"] = order;
  j["config"] = c;
  j["dimension"] = basis.size();
  j["expected_dimension"] = harmonic_dimension(n, p.d());
  j["gram_residual"] = basis.gram_residual;
  j["gram_condition"] = basis.gram_condition;
  j["passed"] = basis.gram_residual <= tol;
  Json spanning = Json::array();
  for (const Polynomial& q : basis.spanning) spanning.push_back(Json::parse(to_json(q).dump()));
  j["spanning"] = spanning;
  j["transform"] = basis.transform;
  Json ortho = Json::array();
  for (std::size_t k = 0; k < basis.size(); ++k) ortho.push_back(Json::parse(basis.orthonormal_json(k).dump()));
  j["orthonormal"] = ortho;
  Sink sink(cfg.out, out);
  write_json(sink, j);
  return basis.gram_residual <= tol ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------- kernel

struct KernelArgs {
  unsigned n = 0;
  int ell = 1;
  std::string x;
  std::size_t samples = 20;
  std::string deltas;
};

int cmd_kernel(const RunConfig& cfg, const KernelArgs& a, std::ostream& out) {
  const KappaParams p = make_params(cfg);
  require_positive_kappa(p, "kernel");
  if (p.d() > 4) throw UsageError("kernel supports d <= 4");
  const std::size_t ell = axis_from_flag(a.ell, p.d());
  const std::vector<double> deltas = a.deltas.empty() ? std::vector<double>{} : parse_number_list(a.deltas);
  std::vector<std::vector<double>> xs;
  if (!a.x.empty()) {
    xs.push_back(point_from_flag(a.x, p.d()));
  } else {
    xs = random_sphere_points(p.d(), a.samples, cfg.seed);
  }
  const std::size_t m = cfg.simplex_order ? cfg.simplex_order : default_simplex_order(a.n + 1);
  const SimplexRule rule = build_rule(p.d(), p.kappa_value(), m);
  const std::size_t order = cfg.sphere_order ? cfg.sphere_order : harmonic_sphere_order(a.n, p);
  const HarmonicBasis basis = hharmonic_basis(a.n, p, build_sphere_rule_for(p.d(), order, p.kappa_value()));
  std::vector<double> e(p.d(), 0.0);
  e[ell] = 1.0;
  const double tol = cfg.tol > 0 ? cfg.tol : 1e-7;

  Json rows = Json::array();
  double worst = 0.0;
  for (const auto& x : xs) {
    const double ax = repro_kernel_axis(a.n, ell, x, p, rule);
    const double bs = repro_kernel_basis(x, e, basis);
    worst = std::max(worst, std::fabs(ax - bs));
    Json r{{"x", x}, {"axis", ax}, {"basis", bs}, {"deviation", std::fabs(ax - bs)}};
    if (!deltas.empty()) {
      Json ces = Json::array();
      for (double delta : deltas) ces.push_back({{"delta", delta}, {"value", cesaro_kernel_axis(a.n, delta, ell, x, p, rule)}});
      r["cesaro"] = ces;
    }
    rows.push_back(r);
  }
  Json j;
  Json c = config_json("kernel", cfg, p);
  c["n"] = a.n;
  c["ell"] = a.ell;
  c["samples"] = xs.size();
  j["config"] = c;
  j["max_deviation"] = worst;
  j["passed"] = worst <= tol;
  j["points"] = rows;
  Sink sink(cfg.out, out);
  write_json(sink, j);
  return worst <= tol ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------- bessel

int cmd_bessel(const RunConfig& cfg, const std::string& y_text, const std::string& x_text, const std::string& path,
               std::ostream& out) {
  const KappaParams p = make_params(cfg);
  require_positive_kappa(p, "bessel");
  const std::vector<double> y = parse_number_list(y_text);
  if (y.size() != p.d()) throw UsageError("--y needs exactly d coordinates");
  std::vector<double> x(p.d(), 0.0);
  x[0] = 1.0;
  if (!x_text.empty()) {
    if (p.d() != 2) throw UsageError("--x is only accepted for d = 2");
    x = parse_number_list(x_text);
    if (x.size() != 2) throw UsageError("--x needs two coordinates");
  }
  const bool all = path == "all";
  const std::size_t m = cfg.simplex_order ? cfg.simplex_order : 48;
  const SimplexRule rule = build_rule(p.d(), p.kappa_value(), m);
  const double tol = cfg.tol > 0 ? cfg.tol : 1e-9;

  std::vector<std::pair<std::string, ComplexValue>> values;
  Json extra;
  if (all || path == "direct") {
    values.emplace_back("direct", p.d() == 2 ? bessel_k2_direct(x, y, p, rule) : bessel_k(y, true, p, rule));
  }
  if ((all && p.d() == 2) || path == "closed") {
    if (p.d() != 2) throw UsageError("the closed form exists for d = 2 only");
    const ClosedFormK2 cf = bessel_k2_closed(p.kappa_value(), x, y);
    values.emplace_back("closed", cf.reconciled);
    extra["closed_printed"] = {cf.printed.real(), cf.printed.imag()};
    extra["closed_phase"] = cf.phase;
    extra["closed_z"] = cf.z;
  }
  if ((all && p.d() >= 3) || path == "recursive") {
    if (p.d() < 3) throw UsageError("the recursion needs d >= 3");
    const RecursiveK rk = bessel_recursive(y, p, m);
    values.emplace_back("recursive", rk.value);
    extra["printed_constant_factor"] = rk.printed_constant_factor;
  }

  Json j;
  Json c = config_json("bessel", cfg, p);
  c["x"] = x;
  c["y"] = y;
  c["path"] = path;
  j["config"] = c;
  Json vals;
  for (const auto& [name, v] : values) vals[name] = {v.real(), v.imag()};
  j["values"] = vals;
  Json dev = Json::array();
  double worst = 0.0;
  for (std::size_t a = 0; a < values.size(); ++a) {
    for (std::size_t b = a + 1; b < values.size(); ++b) {
      const double dv = std::abs(values[a].second - values[b].second);
      worst = std::max(worst, dv);
      dev.push_back({{"a", values[a].first}, {"b", values[b].first}, {"deviation", dv}});
    }
  }
  j["deviations"] = dev;
  if (!extra.is_null()) j["notes"] = extra;
  j["passed"] = worst <= tol;
  Sink sink(cfg.out, out);
  write_json(sink, j);
  return worst <= tol ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------- lebesgue

struct LebesgueArgs {
  int ell = 1;
  std::string deltas;
  unsigned n_max = 0;
  bool no_error_estimate = false;
  bool classify = false;
};

int cmd_lebesgue(const RunConfig& cfg, const LebesgueArgs& a, std::ostream& out, std::ostream& err,
                 const std::atomic<bool>* cancel) {
  const KappaParams p = make_params(cfg);
  if (p.d() > 4) throw UsageError("lebesgue supports d <= 4");
  const std::size_t ell = axis_from_flag(a.ell, p.d());
  const std::vector<double> deltas = parse_number_list(a.deltas);
  if (deltas.empty()) throw UsageError("--delta is empty");
  for (double delta : deltas) {
    if (!(delta > -1.0)) throw UsageError("every delta must exceed -1");
  }
  if (a.n_max == 0) throw UsageError("--n-max must be >= 1");
  if (a.classify && a.n_max < 64) throw UsageError("--classify needs --n-max >= 64");

  LebesgueOptions opt;
  opt.sphere_order = cfg.sphere_order;
  opt.simplex_order = cfg.simplex_order;
  opt.workers = cfg.workers;
  opt.error_estimate = !a.no_error_estimate;
  opt.cancel = cancel;

  Json c = config_json("lebesgue", cfg, p);
  c["ell"] = a.ell;
  c["delta"] = deltas;
  c["n_max"] = a.n_max;
  c["sphere_order_used"] = cfg.sphere_order ? cfg.sphere_order : default_lebesgue_sphere_order(a.n_max);
  c["error_estimate"] = opt.error_estimate;
  c["critical_delta"] = p.critical_delta();

  const std::string format = resolve_format(cfg, "csv");
  Sink sink(cfg.out, out);
  std::ostream& os = sink.os();
  if (format == "csv") {
    write_csv_header(os, c);
    os << "d,kappa,ell,delta,n,I_n,err_est\n";
    os.flush();
  }

  std::vector<SweepRecord> rows;
  std::vector<DeltaClassification> classes;
  try {
    if (a.classify) {
      CriticalSweep cs = critical_sweep(p, deltas, a.n_max, ell, opt);
      rows = std::move(cs.records);
      classes = std::move(cs.classes);
    } else {
      rows = lebesgue_sweep(p, ell, deltas, a.n_max, opt);
    }
  } catch (const SweepCancelled&) {
    if (format == "json") {
      Json j;
      j["config"] = c;
      j["complete"] = false;
      j["records"] = Json::array();
      os << j.dump(2) << "\n";
    }
    os.flush();
    err << "interrupted: no sweep completed, output holds the header only\n";
    return exit_failed;
  }

  const auto class_json = [](const DeltaClassification& dc) {
    const GrowthFit& f = dc.fit;
    return Json{{"delta", dc.delta},
                {"classification", f.classification},
                {"best_model", f.best_model},
                {"non_decreasing", f.non_decreasing},
                {"bounded_a", f.bounded_a},
                {"bounded_c", f.bounded_c},
                {"bounded_rss", f.bounded_rss},
                {"log_b", f.log_b},
                {"log_b_se", f.log_b_se},
                {"log_rss", f.log_rss},
                {"power_p", f.power_p},
                {"power_p_se", f.power_p_se},
                {"power_rss", f.power_rss}};
  };

  if (format == "csv") {
    const std::string kappa = to_string(p.kappa());
    for (const SweepRecord& r : rows) {
      os << r.d << "," << kappa << "," << r.ell + 1 << "," << num(r.delta) << "," << r.n << "," << num(r.value) << ","
         << num(r.err_est) << "\n";
    }
    for (const DeltaClassification& dc : classes) os << "# classification " << class_json(dc).dump() << "\n";
  } else {
    Json j;
    j["config"] = c;
    j["complete"] = true;
    Json recs = Json::array();
    for (const SweepRecord& r : rows) {
      recs.push_back({{"d", r.d}, {"kappa", r.kappa}, {"ell", r.ell + 1}, {"delta", r.delta}, {"n", r.n},
                      {"I_n", r.value}, {"err_est", r.err_est}});
    }
    j["records"] = recs;
    if (!classes.empty()) {
      Json cl = Json::array();
      for (const DeltaClassification& dc : classes) cl.push_back(class_json(dc));
      j["classification"] = cl;
    }
    os << j.dump(2) << "\n";
  }
  os.flush();
  return exit_ok;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::string check;
  unsigned n_max = 128;
  std::optional<double> alpha, beta, delta;
  int ell = 1;
  std::size_t samples = 8;
  std::size_t grid = 201;
};

std::vector<unsigned> bound_ns(unsigned n_max) {
  std::vector<unsigned> ns;
  const unsigned step = std::max(1u, n_max / 8);
  for (unsigned n = step; n <= n_max; n += step) ns.push_back(n);
  if (ns.empty() || ns.back() != n_max) ns.push_back(n_max);
  return ns;
}

int cmd_bounds(const RunConfig& cfg, const BoundsArgs& a, std::ostream& out) {
  const KappaParams p = make_params(cfg);
  if (a.n_max < 2) throw UsageError("--n-max must be >= 2");
  const double g = p.lambda() - 0.5;
  const double alpha = a.alpha.value_or(g), beta = a.beta.value_or(g);
  Json c = config_json("bounds", cfg, p);
  c["check"] = a.check;
  c["n_max"] = a.n_max;
  c["alpha"] = alpha;
  c["beta"] = beta;

  BoundReport rep;
  if (a.check == "szego") {
    rep = szego_check(JacobiParams(alpha, beta), a.n_max, a.grid);
    c["grid"] = a.grid;
  } else if (a.check == "knd") {
    const double delta = a.delta.value_or(alpha + beta + 2.0);
    c["delta"] = delta;
    c["grid"] = a.grid;
    rep = knd_positivity_check(a.n_max, JacobiParams(alpha, beta), delta, a.grid);
  } else {
    require_positive_kappa(p, "this check");
    if (p.d() > 4) throw UsageError("estimate and kernel checks support d <= 4");
    const std::size_t ell = axis_from_flag(a.ell, p.d());
    const auto xs = random_sphere_points(p.d(), a.samples, cfg.seed);
    const std::vector<unsigned> ns = bound_ns(a.n_max);
    c["ell"] = a.ell;
    c["samples"] = a.samples;
    if (a.check == "estimate") {
      rep = estimate_check(ns, p, alpha, beta, ell, xs);
    } else {
      const double delta = a.delta.value_or(p.critical_delta() + 0.5);
      c["delta"] = delta;
      rep = kernel_bound_check(ns, delta, ell, p, xs);
    }
  }

  Json j;
  j["config"] = c;
  j["check"] = rep.check;
  j["fitted_c"] = rep.fitted_c;
  j["fitted_c_half"] = rep.fitted_c_half;
  j["stability"] = rep.stability;
  j["stable"] = rep.stable();
  j["min_value"] = rep.min_value;
  Json series = Json::array();
  for (const auto& [n, r] : rep.ratio_series) series.push_back({n, r});
  j["ratio_series"] = series;
  Sink sink(cfg.out, out);
  write_json(sink, j);
  return rep.stable() ? exit_ok : exit_failed;
}

}  // namespace

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  const auto to_num = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw UsageError("bad number '" + s + "' in list '" + text + "'");
    }
    if (used != s.size()) throw UsageError("bad number '" + s + "' in list '" + text + "'");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto c1 = item.find(':');
    if (c1 == std::string::npos) {
      values.push_back(to_num(item));
      continue;
    }
    const auto c2 = item.find(':', c1 + 1);
    if (c2 == std::string::npos) throw UsageError("range must be a:b:step, got '" + item + "'");
    const double lo = to_num(item.substr(0, c1)), hi = to_num(item.substr(c1 + 1, c2 - c1 - 1));
    const double step = to_num(item.substr(c2 + 1));
    if (!(step > 0) || hi < lo) throw UsageError("range needs step > 0 and b >= a, got '" + item + "'");
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    for (long k = 0; k <= count; ++k) values.push_back(lo + static_cast<double>(k) * step);
  }
  return values;
}

std::vector<std::string> config_file_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::string> args;
  std::string line;
  const auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty()) throw UsageError("config line without key: " + line);
    args.push_back("--" + key);
    if (value == "true" && (key == "classify" || key == "no-error-estimate")) continue;
    args.push_back(value);
  }
  return args;
}

int run_cli(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err,
            const std::atomic<bool>* cancel) {
  // Settings from --config come first so that explicit flags override them.
  std::vector<std::string> args;
  std::vector<std::string> file_args;
  try {
    for (std::size_t i = 0; i < args_in.size(); ++i) {
      const std::string& a = args_in[i];
      if (a == "--config") {
        if (i + 1 >= args_in.size()) throw UsageError("--config needs a path");
        file_args = config_file_args(args_in[++i]);
      } else if (a.rfind("--config=", 0) == 0) {
        file_args = config_file_args(a.substr(9));
      } else {
        args.push_back(a);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  if (!args.empty() && !file_args.empty()) args.insert(args.begin() + 1, file_args.begin(), file_args.end());

  CLI::App app{"Dunkl intertwining operator, h-harmonics and Cesaro summability experiments", "dunkl"};
  app.set_version_flag("--version", std::string(DUNKL_VERSION));
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.footer("Settings may also come from --config <file> with key=value lines; flags override them.");

  RunConfig cfg;

  unsigned max_degree = 8;
  auto* verify = app.add_subcommand("verify", "exact check of D_i V = V d_i on x_ell^n");
  add_common(verify, cfg);
  verify->add_option("--max-degree", max_degree, "largest n")->check(CLI::Range(0u, 40u));

  unsigned hb_n = 0;
  auto* hbasis = app.add_subcommand("hbasis", "orthonormal basis of the degree-n h-harmonics");
  add_common(hbasis, cfg);
  hbasis->add_option("--n", hb_n, "degree")->required()->check(CLI::Range(0u, 30u));

  KernelArgs ka;
  auto* kernel = app.add_subcommand("kernel", "reproducing kernel at a coordinate vector, two ways");
  add_common(kernel, cfg);
  kernel->add_option("--n", ka.n, "degree")->required()->check(CLI::Range(0u, 30u));
  kernel->add_option("--ell", ka.ell, "coordinate vector e_ell (1-based)");
  kernel->add_option("--x", ka.x, "comma-separated point; random sphere points when omitted");
  kernel->add_option("--samples", ka.samples, "number of random points")->check(CLI::Range(1, 100000));
  kernel->add_option("--delta", ka.deltas, "also evaluate Cesaro kernels for these delta");

  std::string y_text, x_text, path = "all";
  auto* bessel = app.add_subcommand("bessel", "generalized Bessel function K(x, iy) on every path");
  add_common(bessel, cfg);
  bessel->add_option("--y", y_text, "comma-separated y")->required();
  bessel->add_option("--x", x_text, "x for d = 2 (default e_1)");
  bessel->add_option("--path", path, "direct, closed, recursive or all")
      ->check(CLI::IsMember({"direct", "closed", "recursive", "all"}));

  LebesgueArgs la;
  auto* lebesgue = app.add_subcommand("lebesgue", "Lebesgue constants I_n of the Cesaro means at e_ell");
  add_common(lebesgue, cfg);
  lebesgue->add_option("--ell", la.ell, "coordinate vector e_ell (1-based)");
  lebesgue->add_option("--delta", la.deltas, "delta list 'a,b' or range 'a:b:step'")->required();
  lebesgue->add_option("--n-max", la.n_max, "largest n")->required()->check(CLI::Range(1u, 2000u));
  lebesgue->add_flag("--no-error-estimate", la.no_error_estimate, "skip the second, coarser sphere pass");
  lebesgue->add_flag("--classify", la.classify, "fit growth models on n in [n_max/4, n_max]");

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "fitted constants of the kernel and Jacobi estimates");
  add_common(bounds, cfg);
  bounds->add_option("--check", ba.check, "estimate, kernel, knd or szego")
      ->required()
      ->check(CLI::IsMember({"estimate", "kernel", "knd", "szego"}));
  bounds->add_option("--n-max", ba.n_max, "largest n")->check(CLI::Range(2u, 4000u));
  bounds->add_option("--alpha", ba.alpha, "Jacobi alpha (default lambda - 1/2)");
  bounds->add_option("--beta", ba.beta, "Jacobi beta (default lambda - 1/2)");
  bounds->add_option("--delta", ba.delta, "Cesaro order");
  bounds->add_option("--ell", ba.ell, "coordinate vector e_ell (1-based)");
  bounds->add_option("--samples", ba.samples, "random sphere points")->check(CLI::Range(1, 10000));
  bounds->add_option("--grid", ba.grid, "grid size in t")->check(CLI::Range(2, 100000));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForVersion&) {
    out << DUNKL_VERSION << "\n";
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  try {
    if (*verify) return cmd_verify(cfg, max_degree, out);
    if (*hbasis) return cmd_hbasis(cfg, hb_n, out);
    if (*kernel) return cmd_kernel(cfg, ka, out);
    if (*bessel) return cmd_bessel(cfg, y_text, x_text, path, out);
    if (*lebesgue) return cmd_lebesgue(cfg, la, out, err, cancel);
    if (*bounds) return cmd_bounds(cfg, ba, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return exit_failed;
  }
  err << app.help();
  return exit_usage;
}

}  // namespace dunkl
