#include <cmath>
#include <cstdio>
#include <sstream>

#include "rabi/cli/commands.hpp"
#include "rabi/errors.hpp"
#include "rabi/exactdiag.hpp"
#include "rabi/optimize.hpp"
#include "rabi/variational.hpp"

namespace rabi::cli {

namespace {

WavefunctionProfile ed_profile(const RunConfig& cfg, const ModelParams& p,
                               const std::vector<double>& grid) {
  const SpectrumResult even = solve_parity_sector(p, cfg.truncation(), Parity::Even, 1, cfg.diag_options());
  const SpectrumResult odd = solve_parity_sector(p, cfg.truncation(), Parity::Odd, 1, cfg.diag_options());
  const SpectrumResult& ground = odd.energies[0] < even.energies[0] ? odd : even;
  const SpinXCoefficients c = spin_x_projection(ground.vectors[0]);
  return position_profile(c.plus, c.minus, grid, p.omega);
}

// Branch functions of the optimized ansatz: phi(x) = C1 f1(x) + C2 f2(x) on
// |+x>, and -+phi(-x) on |-x> for even/odd parity.
WavefunctionProfile css2_profile(const RunConfig& cfg, const ModelParams& p,
                                 const std::vector<double>& grid) {
  std::optional<OptResult> best;
  Parity parity = Parity::Even;
  for (Parity par : cfg.parities()) {
    OptResult r;
    try {
      r = solve_ansatz(p, {AnsatzTag::CSS2, par});
    } catch (const NoConvergence& e) {
      r = e.best();
    }
    if (!best || r.energy < best->energy) {
      best = r;
      parity = par;
    }
  }
  const Ansatz2Params a = best->as_two_state();
  const double scale = 1.0 / std::sqrt(norm_2css(a));
  const auto phi = [&](double x) {
    return a.c1 * css_wavefunction({a.beta1, a.xi}, x, p.omega) +
           a.c2 * css_wavefunction({a.beta2, a.xi}, x, p.omega);
  };
  WavefunctionProfile prof;
  prof.xs = grid;
  for (double x : grid) {
    prof.phi_plus.push_back(scale * phi(x));
    prof.phi_minus.push_back(-sign_of(parity) * scale * phi(-x));
  }
  prof.peaks_plus = count_peaks(prof.phi_plus);
  prof.peaks_minus = count_peaks(prof.phi_minus);
  return prof;
}

}  // namespace

WavefunctionResult ground_wavefunction(const RunConfig& cfg, double lambda, const std::string& source) {
  const ModelParams p = ModelParams::from_lambda(cfg.delta, cfg.omega, cfg.tau, lambda);
  const std::vector<double> grid = make_grid(cfg.x_min, cfg.x_max, cfg.x_step);
  WavefunctionResult r{lambda, source, {}};
  if (source == "ED") {
    r.profile = ed_profile(cfg, p, grid);
  } else if (source == "CSS2") {
    r.profile = css2_profile(cfg, p, grid);
  } else {
    throw InvalidArgument("source must be ED or CSS2, got '" + source + "'");
  }
  return r;
}

double profile_overlap(const WavefunctionProfile& a, const WavefunctionProfile& b) {
  if (a.xs != b.xs) throw InvalidArgument("profiles must share a grid");
  double s = 0.0;
  for (std::size_t i = 1; i < a.xs.size(); ++i) {
    const double h = a.xs[i] - a.xs[i - 1];
    s += 0.5 * h *
         (a.phi_plus[i] * b.phi_plus[i] + a.phi_plus[i - 1] * b.phi_plus[i - 1] +
          a.phi_minus[i] * b.phi_minus[i] + a.phi_minus[i - 1] * b.phi_minus[i - 1]);
  }
  return s;
}

std::vector<WavefunctionResult> cmd_wavefunction(const RunConfig& cfg) {
  cfg.validate();
  std::filesystem::create_directories(cfg.out);
  std::vector<WavefunctionResult> results;
  std::ostringstream peaks;
  peaks << "lambda\tsource\tpeaks_plus\tpeaks_minus\tnorm\n";
  std::ostringstream gp;
  gp << "set terminal pngcairo size 900,600\n"
     << "set datafile separator '\\t'\n"
     << "set xlabel 'x'\nset ylabel 'phi'\n";
  for (double lambda : cfg.lambdas) {
    WavefunctionResult r = ground_wavefunction(cfg, lambda, cfg.source);
    char label[32];
    std::snprintf(label, sizeof label, "%g", lambda);
    const std::string name = "wavefunction_" + cfg.source + "_" + label + ".tsv";
    std::ostringstream os;
    os << "x\tphi_plus\tphi_minus\n";
    for (std::size_t i = 0; i < r.profile.xs.size(); ++i)
      os << format_double(r.profile.xs[i]) << '\t' << format_double(r.profile.phi_plus[i]) << '\t'
         << format_double(r.profile.phi_minus[i]) << '\n';
    write_text(cfg.out / name, os.str());
    peaks << format_double(lambda) << '\t' << cfg.source << '\t' << r.profile.peaks_plus << '\t'
          << r.profile.peaks_minus << '\t' << format_double(r.profile.norm()) << '\n';
    gp << "\nset output '" << name.substr(0, name.size() - 4) << ".png'\n"
       << "set title 'lambda = " << format_double(lambda) << "'\n"
       << "plot '" << name << "' using 1:2 skip 1 with lines title 'phi_+x', \\\n"
       << "     '' using 1:3 skip 1 with lines title 'phi_-x'\n";
    results.push_back(std::move(r));
  }
  write_text(cfg.out / ("peaks_" + cfg.source + ".tsv"), peaks.str());
  write_meta(cfg, "wavefunction");
  write_text(cfg.out / "plot.gp", gp.str());
  return results;
}

}  // namespace rabi::cli
