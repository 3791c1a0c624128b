#include "rabi/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "rabi/cli/commands.hpp"
#include "rabi/cli/table.hpp"
#include "rabi/errors.hpp"
#include "rabi/exactdiag.hpp"
#include "rabi/optimize.hpp"
#include "rabi/oracle.hpp"
#include "rabi/states.hpp"
#include "rabi/variational.hpp"

namespace rabi::cli {

namespace {

constexpr double kOracleTol = 1e-8;
constexpr double kBoundTol = 1e-8;
constexpr double kStationarityTol = 1e-6;
const Truncation kOracleTruncation{200, 1e-12};

// Portable uniform draws: the bit pattern of mt19937_64 is fixed by the
// standard, std::uniform_real_distribution is not.
class Draw {
 public:
  explicit Draw(unsigned long long seed) : rng_(seed) {}
  double operator()(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 rng_;
};

std::string tau_label(const std::string& name, double tau) {
  return name + "[tau=" + format_double(tau) + "]";
}

CheckResult finish(std::string name, double dev, double tol, int samples) {
  return {std::move(name), dev, tol, samples, std::isfinite(dev) && dev <= tol};
}

Ansatz2Params random_two_state(Draw& d) {
  for (;;) {
    const Ansatz2Params a{d(-1, 1), d(-1, 1), d(-3, 3), d(-3, 3), d(0, 0.4)};
    if (norm_2css(a) > 1e-2) return a;
  }
}

std::vector<CheckResult> oracle_checks(const RunConfig& cfg, const VerifyFunctionals& f) {
  std::vector<CheckResult> out;
  Draw d(cfg.seed);
  const int n = cfg.verify_samples;

  {
    const FockOracle oracle(ModelParams::make(cfg.delta, cfg.omega, 0.0, 1.0), kOracleTruncation);
    double dev = 0.0;
    for (int i = 0; i < n; ++i) {
      const double b1 = d(-3, 3), b2 = d(-3, 3), xi = d(0, 0.4);
      for (int sign : {+1, -1})
        dev = std::max(dev, std::abs(f.overlap_css(b1, b2, xi, sign) - oracle.overlap(b1, b2, xi, sign)));
    }
    out.push_back(finish("overlap_css", dev, kOracleTol, n));
  }

  for (double tau : cfg.verify_taus) {
    double e1 = 0.0, n1 = 0.0, e_even = 0.0, e_odd = 0.0, n2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const ModelParams p = ModelParams::from_lambda(cfg.delta, cfg.omega, tau, d(0, 1.5));
      const FockOracle oracle(p, kOracleTruncation);
      const Ansatz1Params a1{d(-3, 3), d(0, 0.4)};
      e1 = std::max(e1, std::abs(f.energy_1css(p, a1) - oracle.energy_1css(a1)));
      n1 = std::max(n1, std::abs(f.mean_photon_1css(a1) - oracle.photon_1css(a1)));
      const Ansatz2Params a2 = random_two_state(d);
      e_even = std::max(e_even, std::abs(f.energy_2css(p, a2, Parity::Even) -
                                         oracle.energy_2css(a2, Parity::Even)));
      e_odd = std::max(e_odd, std::abs(f.energy_2css(p, a2, Parity::Odd) -
                                       oracle.energy_2css(a2, Parity::Odd)));
      n2 = std::max(n2, std::abs(f.mean_photon_2css(a2) - oracle.photon_2css(a2)));
    }
    out.push_back(finish(tau_label("energy_1css", tau), e1, kOracleTol, n));
    out.push_back(finish(tau_label("mean_photon_1css", tau), n1, kOracleTol, n));
    out.push_back(finish(tau_label("energy_2css_even", tau), e_even, kOracleTol, n));
    out.push_back(finish(tau_label("energy_2css_odd", tau), e_odd, kOracleTol, n));
    out.push_back(finish(tau_label("mean_photon_2css", tau), n2, kOracleTol, n));
  }
  return out;
}

double solved_energy(const ModelParams& p, const AnsatzKind& kind) {
  try {
    return solve_ansatz(p, kind).energy;
  } catch (const NoConvergence& e) {
    return e.best().energy;
  }
}

std::vector<CheckResult> bound_checks(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  const std::vector<double> lambdas{0.5, 1.0, 1.5};
  for (double tau : cfg.verify_taus) {
    double bound = 0.0, nesting = 0.0;
    for (double lambda : lambdas) {
      const ModelParams p = ModelParams::from_lambda(cfg.delta, cfg.omega, tau, lambda);
      const double ed_even =
          solve_parity_sector(p, cfg.truncation(), Parity::Even, 1, cfg.diag_options()).energies[0];
      const double ed_odd =
          solve_parity_sector(p, cfg.truncation(), Parity::Odd, 1, cfg.diag_options()).energies[0];
      const double scale = std::max(1.0, std::abs(ed_even));
      const double cs1 = solved_energy(p, {AnsatzTag::CS1});
      const double css1 = solved_energy(p, {AnsatzTag::CSS1});
      const double cs2 = solved_energy(p, {AnsatzTag::CS2});
      const double css2 = solved_energy(p, {AnsatzTag::CSS2});
      const double css2_odd = solved_energy(p, {AnsatzTag::CSS2, Parity::Odd});
      for (double e : {cs1, css1, cs2, css2}) bound = std::max(bound, (ed_even - e) / scale);
      bound = std::max(bound, (ed_odd - css2_odd) / scale);
      nesting = std::max({nesting, (css2 - css1) / scale, (css1 - cs1) / scale, (css2 - cs2) / scale});
    }
    const int samples = static_cast<int>(lambdas.size());
    out.push_back(finish(tau_label("variational_bound", tau), std::max(bound, 0.0), kBoundTol, samples));
    out.push_back(finish(tau_label("nesting", tau), std::max(nesting, 0.0), kBoundTol, samples));
  }
  return out;
}

CheckResult stationarity_check(const RunConfig& cfg) {
  double dev = 0.0;
  int samples = 0;
  for (int i = 0; i < 10; ++i) {
    const double lambda = 0.1 + 0.1 * i + (i >= 9 ? 0.4 : 0.0);
    const ModelParams p = ModelParams::from_lambda(cfg.delta, cfg.omega, 1.0, lambda);
    OptResult r;
    try {
      r = solve_ansatz(p, {AnsatzTag::CSS1});
    } catch (const NoConvergence& e) {
      r = e.best();
      dev = std::max(dev, std::numeric_limits<double>::infinity());
    }
    const StationarityResiduals s = stationarity_residuals_iso(p, std::get<Ansatz1Params>(r.params));
    dev = std::max({dev, std::abs(s.r_xi), std::abs(s.r_beta)});
    ++samples;
  }
  return finish("stationarity[tau=1]", dev, kStationarityTol, samples);
}

}  // namespace

VerifyFunctionals VerifyFunctionals::library() {
  VerifyFunctionals f;
  f.energy_1css = [](const ModelParams& p, const Ansatz1Params& a) { return rabi::energy_1css(p, a); };
  f.mean_photon_1css = [](const Ansatz1Params& a) { return rabi::mean_photon_1css(a); };
  f.energy_2css = [](const ModelParams& p, const Ansatz2Params& a, Parity par) {
    return rabi::energy_2css(p, a, par);
  };
  f.mean_photon_2css = [](const Ansatz2Params& a) { return rabi::mean_photon_2css(a); };
  f.overlap_css = [](double b1, double b2, double xi, int sign) {
    return rabi::overlap_css(b1, b2, xi, sign);
  };
  return f;
}

std::vector<CheckResult> run_oracle_checks(const RunConfig& cfg, const VerifyFunctionals& f) {
  cfg.validate();
  return oracle_checks(cfg, f);
}

std::vector<CheckResult> run_verify(const RunConfig& cfg, const VerifyFunctionals& f) {
  std::vector<CheckResult> out = run_oracle_checks(cfg, f);
  for (CheckResult& r : bound_checks(cfg)) out.push_back(std::move(r));
  out.push_back(stationarity_check(cfg));
  return out;
}

std::string format_check(const CheckResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s %-28s max_dev=%.3e tol=%.0e n=%d", r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.max_deviation, r.tolerance, r.samples);
  return buf;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  const std::vector<CheckResult> results = run_verify(cfg);
  std::ostringstream table;
  table << "check\tmax_deviation\ttolerance\tsamples\tpassed\n";
  int failed = 0;
  for (const CheckResult& r : results) {
    os << format_check(r) << '\n';
    table << r.name << '\t' << format_double(r.max_deviation) << '\t' << format_double(r.tolerance)
          << '\t' << r.samples << '\t' << (r.passed ? 1 : 0) << '\n';
    if (!r.passed) ++failed;
  }
  os << (failed ? "FAILED " : "OK ") << results.size() - static_cast<std::size_t>(failed) << "/"
     << results.size() << " checks passed\n";
  write_text(cfg.out / "verify.tsv", table.str());
  write_meta(cfg, "verify");
  return failed ? 1 : 0;
}

}  // namespace rabi::cli
