#include <algorithm>
#include <cmath>
#include <sstream>

#include "pool.hpp"
#include "rabi/cli/commands.hpp"
#include "rabi/errors.hpp"
#include "rabi/exactdiag.hpp"
#include "rabi/optimize.hpp"
#include "rabi/variational.hpp"

namespace rabi::cli {

namespace {

std::optional<OptResult> try_solve(const ModelParams& p, Parity parity) {
  try {
    return solve_ansatz(p, {AnsatzTag::CSS2, parity});
  } catch (const NoConvergence& e) {
    return e.best();
  } catch (const DegenerateAnsatz&) {
    return std::nullopt;
  }
}

void fill_css2(const ModelParams& p, LevelRow& row) {
  const auto even = try_solve(p, Parity::Even);
  const auto odd = try_solve(p, Parity::Odd);
  if (!even || !odd) return;
  row.css2_even = even->energy;
  row.css2_odd = odd->energy;
  // Once the energies agree to double precision both optima describe the
  // same localized packet; its tunneling gap carries the sign.
  const double direct = even->energy - odd->energy;
  if (std::abs(direct) > 1e-10 * std::max(1.0, std::abs(even->energy))) {
    row.css2_gap = direct;
  } else {
    row.css2_gap = 0.5 * (tunneling_gap_2css(p, even->as_two_state(), Parity::Even) +
                          tunneling_gap_2css(p, odd->as_two_state(), Parity::Odd));
  }
  row.css2_photon = (*row.css2_gap > 0.0 ? *odd : *even).mean_photon();
}

void fill_ed(const RunConfig& cfg, const ModelParams& p, LevelRow& row) {
  try {
    const SectorSplitting s = sector_splitting(p, cfg.truncation(), cfg.diag_options());
    row.ed_even = s.even_energy;
    row.ed_odd = s.odd_energy;
    row.ed_gap = s.splitting;
    const Parity ground = s.splitting > 0.0 ? Parity::Odd : Parity::Even;
    const SpectrumResult r = solve_parity_sector(p, cfg.truncation(), ground, 1, cfg.diag_options());
    row.ed_photon = mean_photon_ed(r.vectors[0]);
  } catch (const TruncationNotConverged&) {
  }
}

std::string levels_table(const std::vector<LevelRow>& rows) {
  std::ostringstream os;
  os << "g_ratio\tg\tcss2_even\tcss2_odd\tcss2_gap\tcss2_photon\ted_even\ted_odd\ted_gap\ted_photon\n";
  for (const LevelRow& r : rows) {
    os << format_double(r.g_ratio) << '\t' << format_double(r.g) << '\t'
       << format_optional(r.css2_even) << '\t' << format_optional(r.css2_odd) << '\t'
       << format_optional(r.css2_gap) << '\t' << format_optional(r.css2_photon) << '\t'
       << format_optional(r.ed_even) << '\t' << format_optional(r.ed_odd) << '\t'
       << format_optional(r.ed_gap) << '\t' << format_optional(r.ed_photon) << '\n';
  }
  return os.str();
}

const char* kLevelsPlot =
    "set terminal pngcairo size 900,600\n"
    "set datafile separator '\\t'\n"
    "set key autotitle columnhead\n"
    "set xlabel 'g/g_c1'\n\n"
    "set output 'levels.png'\nset ylabel 'E'\n"
    "plot 'levels.tsv' using 1:3 with lines title 'CSS2 even', \\\n"
    "     '' using 1:4 with lines title 'CSS2 odd', \\\n"
    "     '' using 1:7 with points title 'ED even', \\\n"
    "     '' using 1:8 with points title 'ED odd'\n\n"
    "set output 'levels_photon.png'\nset ylabel '<a^+a>'\n"
    "plot 'levels.tsv' using 1:6 with lines title 'CSS2', \\\n"
    "     '' using 1:10 with points title 'ED'\n";

}  // namespace

LevelsSummary cmd_levels(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.tau >= 1.0) {
    throw InvalidTau("levels needs tau < 1 for a first-order crossing, got tau=" +
                     format_double(cfg.tau));
  }
  LevelsSummary out;
  out.g_c1 = *ModelParams::make(cfg.delta, cfg.omega, 0.0, cfg.tau).g_c1();
  const std::vector<double> grid = cfg.g_ratio_grid();
  out.rows.resize(grid.size());
  parallel_for(grid.size(), cfg.workers, [&](std::size_t i) {
    const ModelParams p = ModelParams::from_g_ratio(cfg.delta, cfg.omega, cfg.tau, grid[i]);
    LevelRow& row = out.rows[i];
    row.g_ratio = grid[i];
    row.g = p.g;
    fill_css2(p, row);
    fill_ed(cfg, p, row);
  });

  const auto crossing = [&](auto member) {
    std::vector<double> xs, ys;
    for (const LevelRow& r : out.rows)
      if (r.*member) {
        xs.push_back(r.g_ratio);
        ys.push_back(*(r.*member));
      }
    return sign_change(xs, ys);
  };
  out.crossing_css2 = crossing(&LevelRow::css2_gap);
  out.crossing_ed = crossing(&LevelRow::ed_gap);
  if (out.crossing_ed) {
    // The ground state switches sector at the crossing; its photon number
    // jumps by the difference between the two sector ground states there.
    const ModelParams p =
        ModelParams::from_g_ratio(cfg.delta, cfg.omega, cfg.tau, *out.crossing_ed);
    const auto photon = [&](Parity parity) -> std::optional<double> {
      try {
        return mean_photon_ed(
            solve_parity_sector(p, cfg.truncation(), parity, 1, cfg.diag_options()).vectors[0]);
      } catch (const TruncationNotConverged&) {
        return std::nullopt;
      }
    };
    const auto first = std::find_if(out.rows.begin(), out.rows.end(),
                                    [](const LevelRow& r) { return r.ed_gap.has_value(); });
    const bool even_first = *first->ed_gap < 0.0;
    out.photon_before = photon(even_first ? Parity::Even : Parity::Odd);
    out.photon_after = photon(even_first ? Parity::Odd : Parity::Even);
  }

  std::filesystem::create_directories(cfg.out);
  write_text(cfg.out / "levels.tsv", levels_table(out.rows));
  const auto opt = [](const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  write_meta(cfg, "levels",
             {{"g_c1", out.g_c1},
              {"crossing_css2", opt(out.crossing_css2)},
              {"crossing_ed", opt(out.crossing_ed)},
              {"photon_before", opt(out.photon_before)},
              {"photon_after", opt(out.photon_after)}});
  write_text(cfg.out / "plot.gp", kLevelsPlot);
  return out;
}

}  // namespace rabi::cli
