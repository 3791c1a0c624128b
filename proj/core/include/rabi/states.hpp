#pragma once

#include <span>
#include <vector>

#include "rabi/model.hpp"

namespace rabi {

/// Oscillator state U^+(beta) S^+(xi)|0> with U(beta) = exp(beta (a^+ - a))
/// and S(xi) = exp(xi (a^2 - a^+2)): the vacuum is squeezed first and then
/// displaced.
struct CoherentSqueezedParams {
  double beta = 0.0;
  double xi = 0.0;

  /// cosh(2 xi) - sinh(2 xi) = exp(-2 xi).
  double eta() const;
};

/// cosh(2 xi) - sinh(2 xi), computed as exp(-2 xi) to avoid the cancellation.
double squeeze_eta(double xi);

/// Normalized oscillator eigenfunction <x|n> with frequency omega, from the
/// three-term recurrence of normalized Hermite functions.
double hermite_osc_wavefunction(int n, double x, double omega);

/// <x|n> for n = 0..n_max at a single position.
std::vector<double> hermite_osc_levels(int n_max, double x, double omega);

/// Position-space amplitude of U^+(beta) S^+(xi)|0>: a positive Gaussian
/// centred at -sqrt(2/omega) beta with variance exp(4 xi)/(2 omega).
double css_wavefunction(const CoherentSqueezedParams& p, double x, double omega);

/// Uniform grid [x_min, x_max] with the given step (end point included when
/// it lands on the grid).
std::vector<double> make_grid(double x_min, double x_max, double step);

struct WavefunctionProfile {
  std::vector<double> xs;
  std::vector<double> phi_plus;
  std::vector<double> phi_minus;
  int peaks_plus = 0;
  int peaks_minus = 0;

  /// Trapezoid estimate of the integral of phi_plus^2 + phi_minus^2.
  double norm() const;
};

/// Strict local maxima of values^2 that exceed floor_fraction of the global
/// maximum of values^2.
int count_peaks(std::span<const double> values, double floor_fraction = 0.01);

/// Sample phi_{+-x}(x) = sum_n c_{n+-} <x|n> on the grid.
WavefunctionProfile position_profile(std::span<const double> c_plus,
                                     std::span<const double> c_minus,
                                     std::span<const double> grid, double omega);

/// Fock amplitudes of U^+(beta) S^+(xi)|0>, built by applying the truncated
/// generators to the vacuum through Taylor series (sub-stepped so each series
/// stays well conditioned).  Throws TruncationNotConverged when the top five
/// levels hold more than trunc.tail_tol.
std::vector<double> css_fock_amplitudes(const CoherentSqueezedParams& p,
                                        const Truncation& trunc);

/// <+f(beta_k)| +-f(beta_kp)> = exp(-eta^2 (beta_k -+ beta_kp)^2 / 2) for
/// states sharing the squeezing xi.  sign = +1 or -1.
double overlap_css(double beta_k, double beta_kp, double xi, int sign);

}  // namespace rabi
