#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rabi/cli/config.hpp"
#include "rabi/cli/table.hpp"
#include "rabi/states.hpp"

namespace rabi::cli {

struct ScanSummary {
  std::vector<ScanRow> rows;  // grid order, then method order
  int computed = 0;           // rows not found on disk
  int unconverged = 0;
};

/// Writes <out>/<method>.tsv, combined.tsv, meta.json and plot.gp.  Rows
/// already present in <out>/<method>.tsv are reused.
ScanSummary cmd_scan(const RunConfig& cfg);

struct LevelRow {
  double g_ratio = 0.0;
  double g = 0.0;
  std::optional<double> css2_even;
  std::optional<double> css2_odd;
  std::optional<double> css2_gap;  // even - odd
  std::optional<double> css2_photon;
  std::optional<double> ed_even;
  std::optional<double> ed_odd;
  std::optional<double> ed_gap;
  std::optional<double> ed_photon;  // ground state
};

struct LevelsSummary {
  double g_c1 = 0.0;
  std::vector<LevelRow> rows;
  /// g / g_c^(1) where even - odd changes sign, by linear interpolation.
  std::optional<double> crossing_css2;
  std::optional<double> crossing_ed;
  /// <a^+a> of the ED ground state just below and just above the crossing,
  /// i.e. of the two sector ground states at the crossing point.
  std::optional<double> photon_before;
  std::optional<double> photon_after;
};

/// Even/odd CSS2 and ED parity-sector energies against g / g_c^(1).  Writes
/// <out>/levels.tsv, meta.json and plot.gp.  Throws InvalidTau for tau >= 1.
LevelsSummary cmd_levels(const RunConfig& cfg);

/// First sign change of ys along xs, linearly interpolated.
std::optional<double> sign_change(const std::vector<double>& xs, const std::vector<double>& ys);

struct WavefunctionResult {
  double lambda = 0.0;
  std::string source;
  WavefunctionProfile profile;
};

/// Ground-state phi_{+-x} for one coupling from ED or the optimized CSS2.
WavefunctionResult ground_wavefunction(const RunConfig& cfg, double lambda,
                                       const std::string& source);

/// Sum over both branches of the trapezoid integral of phi_a phi_b.
double profile_overlap(const WavefunctionProfile& a, const WavefunctionProfile& b);

/// Writes <out>/wavefunction_<source>_<lambda>.tsv, peaks.tsv, meta.json and
/// plot.gp.
std::vector<WavefunctionResult> cmd_wavefunction(const RunConfig& cfg);

/// Writes <out>/meta.json describing the run.
void write_meta(const RunConfig& cfg, const std::string& command,
                const nlohmann::json& extra = nlohmann::json::object());

}  // namespace rabi::cli
