#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "rabi/ansatz.hpp"
#include "rabi/exactdiag.hpp"
#include "rabi/model.hpp"

namespace rabi::cli {

/// Every knob of the four subcommands.  Physical inputs are in units of omega.
struct RunConfig {
  double delta = 100.0;
  double omega = 1.0;
  double tau = 1.0;

  double lambda_min = 0.0;
  double lambda_max = 1.5;
  double lambda_step = 0.01;

  /// Coupling grid of `levels`, as g / g_c^(1).
  double g_min = 0.9;
  double g_max = 1.1;
  double g_step = 0.005;

  /// ED, CS1, CSS1, CS2, CSS2.
  std::vector<std::string> methods{"ED", "CS1", "CSS1", "CS2", "CSS2"};
  /// even, odd or both; odd only affects the two-state ansatze.
  std::string parity = "even";

  int n_tr = 256;
  double tail_tol = 1e-12;
  /// Largest truncation the adaptive exact diagonalization may reach.
  int n_tr_cap = 4096;

  /// wavefunction: couplings, state source (ED or CSS2) and position grid.
  std::vector<double> lambdas{0.9, 1.1, 1.5};
  std::string source = "ED";
  double x_min = -25.0;
  double x_max = 25.0;
  double x_step = 0.01;

  /// verify: anisotropies to sweep and draws per check.
  std::vector<double> verify_taus{1.0, 1.5, 0.5};
  int verify_samples = 20;
  unsigned long long seed = 20240611ULL;

  int workers = 0;  // 0 = hardware concurrency
  std::filesystem::path out = "out";

  Truncation truncation() const { return {n_tr, tail_tol}; }
  DiagOptions diag_options() const { return {n_tr_cap}; }
  std::vector<Parity> parities() const;
  std::vector<double> lambda_grid() const;
  std::vector<double> g_ratio_grid() const;

  void validate() const;
};

/// Inclusive grid lo, lo + step, ... up to hi (within a 1e-9 step tolerance).
std::vector<double> inclusive_grid(double lo, double hi, double step);

void from_json(const nlohmann::json& j, RunConfig& c);
void to_json(nlohmann::json& j, const RunConfig& c);

RunConfig load_config(const std::filesystem::path& path);

}  // namespace rabi::cli
