#pragma once

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "rabi/ansatz.hpp"
#include "rabi/errors.hpp"
#include "rabi/model.hpp"

namespace rabi {

using Objective = std::function<double(std::span<const double>)>;

struct MinimizeOptions {
  /// Simplex diameter / relative value-spread tolerance.
  double tol = 1e-10;
  /// Evaluation cap per start (simplex phase, restarts included).
  long max_evals_per_start = 100000;
  /// Central-difference step used for the reported gradient.
  double fd_step = 1e-6;
  /// Converged optima must have every gradient component below this.
  double grad_tol = 1e-5;
  /// Initial simplex edge per coordinate; empty means 0.1 max(1, |x_i|).
  std::vector<double> initial_step;
};

struct MinimizeResult {
  std::vector<double> x;
  double value = 0.0;
  int starts_tried = 0;
  long evaluations = 0;
  double grad_norm = 0.0;  // max |df/dx_i|
  bool converged = false;
};

/// Central-difference gradient.
std::vector<double> fd_gradient(const Objective& f, std::span<const double> x,
                                double h);

/// Best local minimum over all starts.  Each start runs a Nelder-Mead simplex
/// (restarted from its best vertex until a restart stops improving), the
/// winner is polished by damped Newton steps on finite differences.  The best
/// value never increases along the way.  converged is false when a start hit
/// the evaluation cap or the polished gradient is above grad_tol.
MinimizeResult minimize_scalar_field(const Objective& f,
                                     const std::vector<std::vector<double>>& starts,
                                     const MinimizeOptions& opts = {});

struct OptResult {
  AnsatzKind kind;
  double energy = 0.0;
  std::variant<Ansatz1Params, Ansatz2Params> params;
  int starts_tried = 0;
  double grad_norm = 0.0;
  bool converged = false;

  /// Parameters in the two-state layout (single-state kinds embedded).
  Ansatz2Params as_two_state() const;
  double mean_photon() const;
};

/// Carries the best result found so far.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, OptResult best)
      : Error(what), best_(std::move(best)) {}
  const OptResult& best() const { return best_; }

 private:
  OptResult best_;
};

struct SolveOptions {
  MinimizeOptions minimize;
  /// Optimum of a neighbouring scan point, used as an extra start.
  std::optional<Ansatz2Params> warm_start;
};

/// Minimize the ansatz energy for one parameter point.  Starts: the
/// large-delta asymptotic estimate, mean-field displacements with xi = 0, the
/// optimum of every smaller nested ansatz (so CSS2 <= CSS1 <= CS1 and
/// CSS2 <= CS2 hold by construction), a symmetric two-Gaussian seed for the
/// two-state kinds, and the warm start.  Two-state results are reported with
/// C1 = cos(theta), C2 = sin(theta), beta1 >= beta2 and C1 >= 0.
/// Throws NoConvergence (with the best result attached).
OptResult solve_ansatz(const ModelParams& params, const AnsatzKind& kind,
                       const SolveOptions& opts = {});

/// Energy of a two-state parameter set for a given kind (single-state kinds
/// use c1/beta1/xi only).  Infinite when the superposition degenerates.
double ansatz_energy(const ModelParams& params, const AnsatzKind& kind,
                     const Ansatz2Params& a);

}  // namespace rabi
