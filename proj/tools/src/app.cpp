#include "rabi/cli/app.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include "rabi/cli/commands.hpp"
#include "rabi/cli/verify.hpp"
#include "rabi/errors.hpp"

namespace rabi::cli {

namespace {

// Flag values are staged here and copied over the config file afterwards,
// so flags win regardless of where --config appears on the command line.
struct Overrides {
  std::string config;
  std::optional<double> delta, omega, tau;
  std::optional<double> lambda_min, lambda_max, lambda_step;
  std::optional<double> g_min, g_max, g_step;
  std::vector<std::string> methods;
  std::optional<std::string> parity, source, out;
  std::optional<int> n_tr, n_tr_cap, workers, samples;
  std::vector<double> lambdas, taus;
  std::optional<double> x_min, x_max, x_step;
  std::optional<unsigned long long> seed;
};

template <typename T>
void take(const std::optional<T>& src, T& dst) {
  if (src) dst = *src;
}

RunConfig resolve(const Overrides& o) {
  RunConfig c = o.config.empty() ? RunConfig{} : load_config(o.config);
  take(o.delta, c.delta);
  take(o.omega, c.omega);
  take(o.tau, c.tau);
  take(o.lambda_min, c.lambda_min);
  take(o.lambda_max, c.lambda_max);
  take(o.lambda_step, c.lambda_step);
  take(o.g_min, c.g_min);
  take(o.g_max, c.g_max);
  take(o.g_step, c.g_step);
  if (!o.methods.empty()) c.methods = o.methods;
  take(o.parity, c.parity);
  take(o.source, c.source);
  if (o.out) c.out = *o.out;
  take(o.n_tr, c.n_tr);
  take(o.n_tr_cap, c.n_tr_cap);
  take(o.workers, c.workers);
  take(o.samples, c.verify_samples);
  if (!o.lambdas.empty()) c.lambdas = o.lambdas;
  if (!o.taus.empty()) c.verify_taus = o.taus;
  take(o.x_min, c.x_min);
  take(o.x_max, c.x_max);
  take(o.x_step, c.x_step);
  take(o.seed, c.seed);
  c.validate();
  return c;
}

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "JSON config file; flags override its entries");
  cmd->add_option("--delta", o.delta, "atomic splitting (units of omega)");
  cmd->add_option("--omega", o.omega, "field frequency");
  cmd->add_option("--tau", o.tau, "anisotropy ratio");
  cmd->add_option("--ntr", o.n_tr, "initial Fock truncation");
  cmd->add_option("--ntr-cap", o.n_tr_cap, "largest adaptive Fock truncation");
  cmd->add_option("--workers", o.workers, "worker threads (0 = all cores)");
  cmd->add_option("--out", o.out, "output directory");
}

void add_lambda_grid(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--lambda-min", o.lambda_min, "first scaled coupling");
  cmd->add_option("--lambda-max", o.lambda_max, "last scaled coupling");
  cmd->add_option("--lambda-step", o.lambda_step, "scaled coupling step");
}

}  // namespace

int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherent-squeezed-state variational study of the anisotropic Rabi model", "rabi_css"};
  app.require_subcommand(1);
  Overrides o;

  CLI::App* scan = app.add_subcommand("scan", "energies, photon numbers and ansatz parameters versus lambda");
  add_common(scan, o);
  add_lambda_grid(scan, o);
  scan->add_option("--methods", o.methods, "any of ED,CS1,CSS1,CS2,CSS2")->delimiter(',');
  scan->add_option("--parity", o.parity, "even, odd or both (two-state ansatze)");

  CLI::App* levels = app.add_subcommand("levels", "even/odd level crossing versus g/g_c1 (tau < 1)");
  add_common(levels, o);
  levels->add_option("--g-min", o.g_min, "first g/g_c1");
  levels->add_option("--g-max", o.g_max, "last g/g_c1");
  levels->add_option("--g-step", o.g_step, "g/g_c1 step");

  CLI::App* wave = app.add_subcommand("wavefunction", "ground-state phi_{+-x}(x) profiles");
  add_common(wave, o);
  wave->add_option("--lambdas", o.lambdas, "scaled couplings")->delimiter(',');
  wave->add_option("--source", o.source, "ED or CSS2");
  wave->add_option("--parity", o.parity, "CSS2 parity: even, odd or both");
  wave->add_option("--x-min", o.x_min, "grid start");
  wave->add_option("--x-max", o.x_max, "grid end");
  wave->add_option("--x-step", o.x_step, "grid step");

  CLI::App* verify = app.add_subcommand("verify", "oracle equivalence, variational bound and stationarity checks");
  add_common(verify, o);
  verify->add_option("--taus", o.taus, "anisotropies to check")->delimiter(',');
  verify->add_option("--samples", o.samples, "random draws per oracle check");
  verify->add_option("--seed", o.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code;
  }

  try {
    RunConfig cfg = resolve(o);
    if (*scan) {
      const ScanSummary s = cmd_scan(cfg);
      out << "scan: " << s.rows.size() << " rows (" << s.computed << " computed, " << s.unconverged
          << " unconverged) in " << cfg.out.string() << '\n';
      return 0;
    }
    if (*levels) {
      const LevelsSummary s = cmd_levels(cfg);
      const auto show = [](const std::optional<double>& v) {
        return v ? format_double(*v) : std::string("none");
      };
      out << "g_c1 = " << format_double(s.g_c1) << '\n'
          << "crossing g/g_c1: CSS2 " << show(s.crossing_css2) << ", ED " << show(s.crossing_ed) << '\n'
          << "ground <a^+a> across the ED crossing: " << show(s.photon_before) << " -> "
          << show(s.photon_after) << '\n';
      return 0;
    }
    if (*wave) {
      for (const WavefunctionResult& r : cmd_wavefunction(cfg))
        out << "lambda " << format_double(r.lambda) << " " << r.source << ": peaks "
            << r.profile.peaks_plus << "/" << r.profile.peaks_minus << ", norm "
            << format_double(r.profile.norm()) << '\n';
      return 0;
    }
    return cmd_verify(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace rabi::cli
