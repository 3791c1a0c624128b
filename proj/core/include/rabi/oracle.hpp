#pragma once

#include <Eigen/Dense>

#include "rabi/ansatz.hpp"
#include "rabi/exactdiag.hpp"
#include "rabi/model.hpp"

namespace rabi {

/// Evaluates ansatz expectation values by constructing the states explicitly
/// in the truncated spin-Fock space and contracting them with the dense
/// Hamiltonian.  Shares no code with the closed-form functionals beyond the
/// parameter structs.
class FockOracle {
 public:
  FockOracle(const ModelParams& params, const Truncation& trunc);

  /// C1 |+x>|f(beta1)> + C2 |-x>|f(beta2)> with the single-state constraint.
  SpinFockVector state_1css(const Ansatz1Params& a) const;

  /// |+x>(C1|+f1> + C2|+f2>) -+ |-x>(C1|-f1> + C2|-f2>), even taking the minus
  /// sign.  Not normalized.
  SpinFockVector state_2css(const Ansatz2Params& a, Parity parity) const;

  double energy_1css(const Ansatz1Params& a) const;
  double photon_1css(const Ansatz1Params& a) const;
  double energy_2css(const Ansatz2Params& a, Parity parity) const;
  double photon_2css(const Ansatz2Params& a) const;

  /// <+f(beta_k)| +-f(beta_kp)> from the Fock amplitudes.
  double overlap(double beta_k, double beta_kp, double xi, int sign) const;

  double rayleigh_quotient(const SpinFockVector& v) const;
  double photon_expectation(const SpinFockVector& v) const;

  const Truncation& truncation() const { return trunc_; }

 private:
  ModelParams params_;
  Truncation trunc_;
  Eigen::MatrixXd hamiltonian_;
};

}  // namespace rabi
