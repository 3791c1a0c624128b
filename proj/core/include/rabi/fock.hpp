#pragma once

#include <Eigen/Dense>

#include "rabi/model.hpp"

namespace rabi {

/// sz|Up> = +|Up>.
enum class Spin { Up = 0, Down = 1 };

/// Basis is spin-major: the Up block (n = 0..n_tr) precedes the Down block.
inline Eigen::Index basis_index(Spin s, int n, int n_tr) {
  return static_cast<Eigen::Index>(s == Spin::Up ? 0 : n_tr + 1) + n;
}

struct BosonOps {
  Eigen::MatrixXd annihilation;
  Eigen::MatrixXd creation;
  Eigen::MatrixXd number;
};

BosonOps boson_ops(const Truncation& trunc);

/// Anisotropic Rabi Hamiltonian assembled term by term from the rotating and
/// counter-rotating couplings.
Eigen::MatrixXd build_hamiltonian(const ModelParams& params,
                                  const Truncation& trunc);

/// Same Hamiltonian assembled from the quadrature form
/// alpha (a^+ + a) sx + gamma (a^+ - a) i sy.  Kept as an independent route
/// for cross-checking build_hamiltonian.
Eigen::MatrixXd build_hamiltonian_quadrature(const ModelParams& params,
                                             const Truncation& trunc);

/// Diagonal of P = exp(i pi (a^+a + sz/2 + 1/2)): (-1)^(n+1) on Up, (-1)^n on
/// Down.
Eigen::VectorXd parity_diag(const Truncation& trunc);

}  // namespace rabi
