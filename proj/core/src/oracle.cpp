#include "rabi/oracle.hpp"

#include <cmath>

#include "rabi/fock.hpp"
#include "rabi/states.hpp"

namespace rabi {

namespace {

Eigen::Map<const Eigen::VectorXd> as_eigen(const SpinFockVector& v) {
  return {v.coeffs.data(), static_cast<Eigen::Index>(v.coeffs.size())};
}

// |+x>|plus_part> + |-x>|minus_part> on the Up/Down basis.
SpinFockVector combine_spin_x(const std::vector<double>& plus_part,
                              const std::vector<double>& minus_part, int n_tr) {
  const double s = 1.0 / std::sqrt(2.0);
  SpinFockVector v;
  v.n_tr = n_tr;
  v.coeffs.assign(static_cast<std::size_t>(2 * (n_tr + 1)), 0.0);
  for (int n = 0; n <= n_tr; ++n) {
    const auto i = static_cast<std::size_t>(n);
    v.coeffs[static_cast<std::size_t>(basis_index(Spin::Up, n, n_tr))] =
        s * (plus_part[i] + minus_part[i]);
    v.coeffs[static_cast<std::size_t>(basis_index(Spin::Down, n, n_tr))] =
        s * (plus_part[i] - minus_part[i]);
  }
  return v;
}

std::vector<double> axpy2(double c1, const std::vector<double>& f1, double c2,
                          const std::vector<double>& f2) {
  std::vector<double> out(f1.size());
  for (std::size_t i = 0; i < f1.size(); ++i) out[i] = c1 * f1[i] + c2 * f2[i];
  return out;
}

}  // namespace

FockOracle::FockOracle(const ModelParams& params, const Truncation& trunc)
    : params_(params), trunc_(trunc), hamiltonian_(build_hamiltonian(params, trunc)) {}

SpinFockVector FockOracle::state_1css(const Ansatz1Params& a) const {
  const double c = 1.0 / std::sqrt(2.0);
  const auto f1 = css_fock_amplitudes({a.beta, a.xi}, trunc_);
  const auto f2 = css_fock_amplitudes({-a.beta, a.xi}, trunc_);
  std::vector<double> plus(f1.size()), minus(f2.size());
  for (std::size_t i = 0; i < f1.size(); ++i) {
    plus[i] = c * f1[i];
    minus[i] = -c * f2[i];
  }
  return combine_spin_x(plus, minus, trunc_.n_tr);
}

SpinFockVector FockOracle::state_2css(const Ansatz2Params& a, Parity parity) const {
  // |+f_k> displaces by -beta_k, |-f_k> by +beta_k.
  const auto p1 = css_fock_amplitudes({a.beta1, a.xi}, trunc_);
  const auto p2 = css_fock_amplitudes({a.beta2, a.xi}, trunc_);
  const auto m1 = css_fock_amplitudes({-a.beta1, a.xi}, trunc_);
  const auto m2 = css_fock_amplitudes({-a.beta2, a.xi}, trunc_);
  const std::vector<double> plus = axpy2(a.c1, p1, a.c2, p2);
  std::vector<double> minus = axpy2(a.c1, m1, a.c2, m2);
  if (parity == Parity::Even) {
    for (double& x : minus) x = -x;
  }
  return combine_spin_x(plus, minus, trunc_.n_tr);
}

double FockOracle::rayleigh_quotient(const SpinFockVector& v) const {
  const auto x = as_eigen(v);
  return x.dot(hamiltonian_ * x) / x.squaredNorm();
}

double FockOracle::photon_expectation(const SpinFockVector& v) const {
  double num = 0.0;
  for (int n = 0; n <= v.n_tr; ++n) {
    const double up = v.at(Spin::Up, n);
    const double dn = v.at(Spin::Down, n);
    num += n * (up * up + dn * dn);
  }
  return num / (v.norm() * v.norm());
}

double FockOracle::energy_1css(const Ansatz1Params& a) const {
  return rayleigh_quotient(state_1css(a));
}

double FockOracle::photon_1css(const Ansatz1Params& a) const {
  return photon_expectation(state_1css(a));
}

double FockOracle::energy_2css(const Ansatz2Params& a, Parity parity) const {
  return rayleigh_quotient(state_2css(a, parity));
}

double FockOracle::photon_2css(const Ansatz2Params& a) const {
  return photon_expectation(state_2css(a, Parity::Even));
}

double FockOracle::overlap(double beta_k, double beta_kp, double xi, int sign) const {
  const auto fk = css_fock_amplitudes({beta_k, xi}, trunc_);
  const auto fkp = css_fock_amplitudes({sign >= 0 ? beta_kp : -beta_kp, xi}, trunc_);
  double s = 0.0;
  for (std::size_t i = 0; i < fk.size(); ++i) s += fk[i] * fkp[i];
  return s;
}

}  // namespace rabi
