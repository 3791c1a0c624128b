#include "rabi/fock.hpp"

#include <cmath>

namespace rabi {

namespace {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Spin matrices in the (Up, Down) ordering.
Eigen::Matrix2d sigma_z() { return (Eigen::Matrix2d() << 1, 0, 0, -1).finished(); }
Eigen::Matrix2d sigma_x() { return (Eigen::Matrix2d() << 0, 1, 1, 0).finished(); }
// i*sigma_y is real.
Eigen::Matrix2d i_sigma_y() { return (Eigen::Matrix2d() << 0, 1, -1, 0).finished(); }
Eigen::Matrix2d sigma_plus() { return (Eigen::Matrix2d() << 0, 1, 0, 0).finished(); }
Eigen::Matrix2d sigma_minus() { return (Eigen::Matrix2d() << 0, 0, 1, 0).finished(); }

}  // namespace

BosonOps boson_ops(const Truncation& trunc) {
  trunc.validate();
  const int m = trunc.levels();
  BosonOps ops;
  ops.annihilation = Eigen::MatrixXd::Zero(m, m);
  for (int n = 1; n < m; ++n) ops.annihilation(n - 1, n) = std::sqrt(double(n));
  ops.creation = ops.annihilation.transpose();
  ops.number = Eigen::MatrixXd::Zero(m, m);
  for (int n = 0; n < m; ++n) ops.number(n, n) = n;
  return ops;
}

Eigen::MatrixXd build_hamiltonian(const ModelParams& params,
                                  const Truncation& trunc) {
  params.validate();
  const BosonOps ops = boson_ops(trunc);
  const Eigen::MatrixXd id_b = Eigen::MatrixXd::Identity(trunc.levels(), trunc.levels());
  const Eigen::MatrixXd id_s = Eigen::Matrix2d::Identity();

  Eigen::MatrixXd h = 0.5 * params.delta * kron(sigma_z(), id_b);
  h += params.omega * kron(id_s, ops.number);
  h += params.g * (kron(sigma_minus(), ops.creation) +
                   kron(sigma_plus(), ops.annihilation));
  h += params.g * params.tau * (kron(sigma_plus(), ops.creation) +
                                kron(sigma_minus(), ops.annihilation));
  return h;
}

Eigen::MatrixXd build_hamiltonian_quadrature(const ModelParams& params,
                                             const Truncation& trunc) {
  params.validate();
  const BosonOps ops = boson_ops(trunc);
  const Eigen::MatrixXd id_b = Eigen::MatrixXd::Identity(trunc.levels(), trunc.levels());
  const Eigen::MatrixXd id_s = Eigen::Matrix2d::Identity();

  Eigen::MatrixXd h = 0.5 * params.delta * kron(sigma_z(), id_b);
  h += params.omega * kron(id_s, ops.number);
  h += params.alpha() * kron(sigma_x(), ops.creation + ops.annihilation);
  h += params.gamma() * kron(i_sigma_y(), ops.creation - ops.annihilation);
  return h;
}

Eigen::VectorXd parity_diag(const Truncation& trunc) {
  trunc.validate();
  Eigen::VectorXd p(trunc.dim());
  for (int n = 0; n <= trunc.n_tr; ++n) {
    const double even_n = (n % 2 == 0) ? 1.0 : -1.0;
    p(basis_index(Spin::Up, n, trunc.n_tr)) = -even_n;
    p(basis_index(Spin::Down, n, trunc.n_tr)) = even_n;
  }
  return p;
}

}  // namespace rabi
