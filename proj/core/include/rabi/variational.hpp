#pragma once

#include "rabi/ansatz.hpp"
#include "rabi/model.hpp"

namespace rabi {

/// omega (sinh^2 2xi + beta^2) - 2 alpha beta - (delta/2 + 2 gamma beta eta^2)
///   * exp(-2 beta^2 eta^2).   xi = 0 gives the coherent-state energy.
double energy_1css(const ModelParams& params, const Ansatz1Params& a);

/// sinh^2(2xi) + beta^2.
double mean_photon_1css(const Ansatz1Params& a);

/// Gradient conditions of energy_1css in the isotropic model:
///   r_xi   = dE/dxi
///   r_beta = (1/2) dE/dbeta
struct StationarityResiduals {
  double r_xi = 0.0;
  double r_beta = 0.0;
};

/// Throws NotIsotropic unless tau == 1.
StationarityResiduals stationarity_residuals_iso(const ModelParams& params,
                                                 const Ansatz1Params& a);

/// Large delta/omega estimates beta ~ g/delta and
/// xi = (1/8) ln(1 + 4 g^2 / (omega delta)).  Throws NotIsotropic unless
/// tau == 1.
Ansatz1Params asymptotic_params(const ModelParams& params);

/// Unnormalized expectation values of the parity-symmetrized two-state
/// ansatz.  `norm` is <psi|psi>.
struct EnergyTerms {
  double atom = 0.0;    // (delta/2) sz
  double photon = 0.0;  // omega a^+a
  double iso = 0.0;     // alpha (a^+ + a) sx
  double ani = 0.0;     // gamma (a^+ - a) i sy
  double norm = 0.0;

  double numerator() const { return atom + photon + iso + ani; }
};

/// Even-parity terms.  The odd-parity state flips the sign of `atom` and
/// `ani` and leaves the rest unchanged.
EnergyTerms energy_terms_2css(const ModelParams& params, const Ansatz2Params& a);

/// Squared norm 2 [C1^2 + C2^2 + 2 C1 C2 <+f1|+f2>].
double norm_2css(const Ansatz2Params& a);

/// Rayleigh quotient of H in the even (Eq. 14 form) or odd state.
/// Throws DegenerateAnsatz when the norm is below 1e-12.
double energy_2css(const ModelParams& params, const Ansatz2Params& a, Parity parity);

/// <a^+a> of the two-state ansatz (parity independent).
double mean_photon_2css(const Ansatz2Params& a);

/// E_even(a) - E_odd(a) at fixed parameters; only the exponentially small
/// inter-branch terms contribute, so this keeps full relative precision
/// where subtracting the two energies would not.
double parity_gap_2css(const ModelParams& params, const Ansatz2Params& a);

/// E_even - E_odd for the one localized packet that `a` (given in `parity`
/// form) describes.  When beta1 and beta2 have opposite signs the two parity
/// forms of that packet differ by the sign of c2; otherwise they coincide and
/// this equals parity_gap_2css.  Near a crossing both optima share the
/// packet, so this resolves the optimal gap long after E_even - E_odd has
/// lost every digit.
double tunneling_gap_2css(const ModelParams& params, const Ansatz2Params& a, Parity parity);

}  // namespace rabi
