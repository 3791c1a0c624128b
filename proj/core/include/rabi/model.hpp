#pragma once

#include <optional>

namespace rabi {

/// Couplings of the anisotropic Rabi Hamiltonian
///
///   H = (delta/2) sz + omega a^+a + g (a^+ s- + a s+) + g tau (a^+ s+ + a s-)
///
/// All energies are expressed in units of omega by convention, but omega is
/// kept explicit so the formulas stay dimensionally honest.
struct ModelParams {
  double delta = 1.0;
  double omega = 1.0;
  double g = 0.0;
  double tau = 1.0;

  /// Validating constructor; throws InvalidArgument on a non-physical set.
  static ModelParams make(double delta, double omega, double g, double tau);

  /// Build from the scaled coupling lambda = (1+tau) g / sqrt(delta omega).
  static ModelParams from_lambda(double delta, double omega, double tau,
                                 double lambda);

  /// Build from g expressed as a fraction of the first-order critical coupling.
  static ModelParams from_g_ratio(double delta, double omega, double tau,
                                  double g_over_gc1);

  /// Weight of the sx quadrature coupling, g (1+tau)/2.
  double alpha() const { return g * (1.0 + tau) / 2.0; }
  /// Weight of the i sy coupling, g (tau-1)/2; zero in the isotropic model.
  double gamma() const { return g * (tau - 1.0) / 2.0; }
  double lambda() const;
  /// Second-order critical coupling sqrt(delta omega)/(1+tau).
  double g_c() const;
  /// First-order critical coupling sqrt(delta omega/(1-tau^2)); only for tau < 1.
  std::optional<double> g_c1() const;

  bool isotropic() const { return tau == 1.0; }

  void validate() const;
};

/// Fock-space cutoff: levels 0..n_tr are kept.
struct Truncation {
  int n_tr = 256;
  /// Largest probability tolerated on the top five kept Fock levels.
  double tail_tol = 1e-12;

  int levels() const { return n_tr + 1; }
  int dim() const { return 2 * (n_tr + 1); }

  void validate() const;
};

enum class Parity { Even = 1, Odd = -1 };

inline int sign_of(Parity p) { return p == Parity::Even ? 1 : -1; }

}  // namespace rabi
