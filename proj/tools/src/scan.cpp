#include <cmath>
#include <map>
#include <sstream>

#include "pool.hpp"
#include "rabi/cli/commands.hpp"
#include "rabi/errors.hpp"
#include "rabi/exactdiag.hpp"
#include "rabi/optimize.hpp"

namespace rabi::cli {

namespace {

struct MethodSpec {
  std::string name;
  bool exact = false;
  AnsatzKind kind;
};

std::vector<MethodSpec> method_specs(const RunConfig& cfg) {
  std::vector<MethodSpec> specs;
  for (const std::string& m : cfg.methods) {
    if (m == "ED") {
      specs.push_back({"ED", true, {}});
      continue;
    }
    const AnsatzTag tag = parse_ansatz_tag(m);
    for (Parity p : cfg.parities()) {
      const AnsatzKind kind{tag, p};
      if (p == Parity::Odd && !kind.two_state()) continue;
      specs.push_back({to_string(kind), false, kind});
    }
  }
  return specs;
}

std::optional<double> scaled(const RunConfig& cfg, double e) {
  if (cfg.delta == 0.0) return std::nullopt;
  return e / (cfg.delta * cfg.omega);
}

ScanRow ed_row(const RunConfig& cfg, const ModelParams& p, double lambda) {
  ScanRow row;
  row.lambda = lambda;
  row.g = p.g;
  row.method = "ED";
  try {
    const SpectrumResult even = solve_parity_sector(p, cfg.truncation(), Parity::Even, 1, cfg.diag_options());
    const SpectrumResult odd = solve_parity_sector(p, cfg.truncation(), Parity::Odd, 1, cfg.diag_options());
    const SpectrumResult& ground = odd.energies[0] < even.energies[0] ? odd : even;
    row.energy = ground.energies[0];
    row.mean_photon = mean_photon_ed(ground.vectors[0]);
    row.converged = true;
  } catch (const TruncationNotConverged&) {
    row.converged = false;
  }
  row.energy_scaled = row.energy ? scaled(cfg, *row.energy) : std::nullopt;
  return row;
}

ScanRow ansatz_row(const RunConfig& cfg, const ModelParams& p, double lambda,
                   const MethodSpec& spec, const OptResult& r) {
  ScanRow row;
  row.lambda = lambda;
  row.g = p.g;
  row.method = spec.name;
  row.energy = r.energy;
  row.energy_scaled = scaled(cfg, r.energy);
  row.converged = r.converged;
  try {
    row.mean_photon = r.mean_photon();
  } catch (const DegenerateAnsatz&) {
  }
  if (spec.kind.two_state()) {
    const Ansatz2Params a = r.as_two_state();
    row.c1 = a.c1;
    row.c2 = a.c2;
    row.beta1 = a.beta1;
    row.beta2 = a.beta2;
    if (spec.kind.squeezed()) row.xi = a.xi;
  } else {
    const auto a = std::get<Ansatz1Params>(r.params);
    row.beta1 = a.beta;
    if (spec.kind.squeezed()) row.xi = a.xi;
  }
  return row;
}

OptResult solve_or_best(const ModelParams& p, const AnsatzKind& kind, const SolveOptions& opts) {
  try {
    return solve_ansatz(p, kind, opts);
  } catch (const NoConvergence& e) {
    return e.best();
  }
}

std::optional<Ansatz2Params> params_of(const ScanRow& row, const AnsatzKind& kind) {
  if (!row.beta1) return std::nullopt;
  const double xi = row.xi.value_or(0.0);
  if (!kind.two_state()) return embed(Ansatz1Params{*row.beta1, xi});
  if (!row.c1 || !row.c2 || !row.beta2) return std::nullopt;
  return Ansatz2Params{*row.c1, *row.c2, *row.beta1, *row.beta2, xi};
}

std::string scan_plot(const std::vector<MethodSpec>& specs) {
  std::ostringstream gp;
  gp << "set terminal pngcairo size 900,600\n"
     << "set datafile separator '\\t'\n"
     << "set key autotitle columnhead\n"
     << "set xlabel 'lambda'\n\n"
     << "set output 'energy.png'\nset ylabel 'E/(Delta omega)'\nplot ";
  for (std::size_t i = 0; i < specs.size(); ++i)
    gp << (i ? ", \\\n     " : "") << "'" << specs[i].name << ".tsv' using 1:5 with lines title '"
       << specs[i].name << "'";
  gp << "\n\nset output 'photon.png'\nset ylabel '<a^+a>'\nplot ";
  for (std::size_t i = 0; i < specs.size(); ++i)
    gp << (i ? ", \\\n     " : "") << "'" << specs[i].name << ".tsv' using 1:6 with lines title '"
       << specs[i].name << "'";
  gp << "\n";
  for (const MethodSpec& s : specs) {
    if (s.exact || s.kind.tag != AnsatzTag::CSS2) continue;
    gp << "\nset output '" << s.name << "_params.png'\nset ylabel ''\n"
       << "plot '" << s.name << ".tsv' using 1:9 with lines title 'C1', \\\n"
       << "     '' using 1:10 with lines title 'C2', \\\n"
       << "     '' using 1:7 with lines title 'beta1', \\\n"
       << "     '' using 1:8 with lines title 'beta2', \\\n"
       << "     '' using 1:11 with lines title 'xi'\n";
  }
  return gp.str();
}

}  // namespace

ScanSummary cmd_scan(const RunConfig& cfg) {
  cfg.validate();
  const std::vector<double> grid = cfg.lambda_grid();
  const std::vector<MethodSpec> specs = method_specs(cfg);
  std::filesystem::create_directories(cfg.out);

  // rows[m][i]; rows already on disk are keyed by their formatted lambda.
  std::vector<std::vector<std::optional<ScanRow>>> rows(specs.size(),
                                                        std::vector<std::optional<ScanRow>>(grid.size()));
  for (std::size_t m = 0; m < specs.size(); ++m) {
    const auto path = cfg.out / (specs[m].name + ".tsv");
    if (!std::filesystem::exists(path)) continue;
    std::map<std::string, ScanRow> existing;
    for (ScanRow& r : read_rows(path)) existing.emplace(format_double(r.lambda), std::move(r));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      auto it = existing.find(format_double(grid[i]));
      if (it != existing.end()) rows[m][i] = it->second;
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> todo;
  for (std::size_t m = 0; m < specs.size(); ++m)
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (!rows[m][i]) todo.emplace_back(m, i);

  std::vector<std::optional<OptResult>> fits(todo.size());
  parallel_for(todo.size(), cfg.workers, [&](std::size_t t) {
    const auto [m, i] = todo[t];
    const ModelParams p = ModelParams::from_lambda(cfg.delta, cfg.omega, cfg.tau, grid[i]);
    if (specs[m].exact) {
      rows[m][i] = ed_row(cfg, p, grid[i]);
    } else {
      fits[t] = solve_or_best(p, specs[m].kind, {});
      rows[m][i] = ansatz_row(cfg, p, grid[i], specs[m], *fits[t]);
    }
  });

  // Warm-start sweep in grid order: each freshly computed point is retried
  // from its left neighbour's optimum and keeps whichever is lower.
  for (std::size_t t = 0; t < todo.size(); ++t) {
    const auto [m, i] = todo[t];
    if (specs[m].exact || i == 0 || !rows[m][i - 1]) continue;
    const auto warm = params_of(*rows[m][i - 1], specs[m].kind);
    if (!warm) continue;
    const ModelParams p = ModelParams::from_lambda(cfg.delta, cfg.omega, cfg.tau, grid[i]);
    SolveOptions opts;
    opts.warm_start = warm;
    const OptResult r = solve_or_best(p, specs[m].kind, opts);
    if (r.energy < fits[t]->energy && (r.converged || !fits[t]->converged)) {
      rows[m][i] = ansatz_row(cfg, p, grid[i], specs[m], r);
    }
  }

  ScanSummary summary;
  summary.computed = static_cast<int>(todo.size());
  std::vector<ScanRow> combined;
  for (std::size_t m = 0; m < specs.size(); ++m) {
    std::vector<ScanRow> per;
    for (auto& r : rows[m]) per.push_back(*r);
    write_rows(cfg.out / (specs[m].name + ".tsv"), per);
  }
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t m = 0; m < specs.size(); ++m) {
      combined.push_back(*rows[m][i]);
      if (!rows[m][i]->converged) ++summary.unconverged;
    }
  write_rows(cfg.out / "combined.tsv", combined);

  nlohmann::json methods = nlohmann::json::array();
  for (const MethodSpec& s : specs) methods.push_back(s.name);
  write_meta(cfg, "scan", {{"methods", methods}, {"grid_points", grid.size()}});
  write_text(cfg.out / "plot.gp", scan_plot(specs));
  summary.rows = std::move(combined);
  return summary;
}

}  // namespace rabi::cli
