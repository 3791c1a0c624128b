#include "rabi/exactdiag.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rabi/errors.hpp"

namespace rabi {

double SpinFockVector::norm() const {
  double s = 0.0;
  for (double c : coeffs) s += c * c;
  return std::sqrt(s);
}

double tail_weight(const SpinFockVector& v) {
  double w = 0.0;
  for (int n = std::max(0, v.n_tr - 4); n <= v.n_tr; ++n) {
    const double up = v.at(Spin::Up, n);
    const double dn = v.at(Spin::Down, n);
    w += up * up + dn * dn;
  }
  return w;
}

void fix_phase(SpinFockVector& v) {
  std::size_t imax = 0;
  for (std::size_t i = 1; i < v.coeffs.size(); ++i) {
    if (std::abs(v.coeffs[i]) > std::abs(v.coeffs[imax])) imax = i;
  }
  if (!v.coeffs.empty() && v.coeffs[imax] < 0.0) {
    for (double& c : v.coeffs) c = -c;
  }
}

namespace {

// One eigensolve at fixed truncation.  `rows` selects a principal submatrix
// (empty = full matrix); eigenvectors are scattered back onto the full basis.
SpectrumResult solve_fixed(const ModelParams& params, const Truncation& trunc,
                           const std::vector<Eigen::Index>& rows, int k) {
  const Eigen::MatrixXd h_full = build_hamiltonian(params, trunc);
  Eigen::MatrixXd h;
  if (rows.empty()) {
    h = h_full;
  } else {
    const auto m = static_cast<Eigen::Index>(rows.size());
    h.resize(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < m; ++j) h(i, j) = h_full(rows[i], rows[j]);
  }
  if (k < 1 || k > h.rows()) {
    throw InvalidArgument("requested " + std::to_string(k) +
                          " eigenpairs from a space of dimension " +
                          std::to_string(h.rows()));
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success) throw Error("dense eigensolver failed");

  SpectrumResult out;
  out.n_tr_used = trunc.n_tr;
  for (int i = 0; i < k; ++i) {
    out.energies.push_back(es.eigenvalues()(i));
    SpinFockVector v;
    v.n_tr = trunc.n_tr;
    v.coeffs.assign(static_cast<std::size_t>(trunc.dim()), 0.0);
    const Eigen::VectorXd col = es.eigenvectors().col(i);
    for (Eigen::Index r = 0; r < col.size(); ++r) {
      const Eigen::Index dst = rows.empty() ? r : rows[static_cast<std::size_t>(r)];
      v.coeffs[static_cast<std::size_t>(dst)] = col(r);
    }
    fix_phase(v);
    out.vectors.push_back(std::move(v));
  }
  out.tail_weight = tail_weight(out.vectors.front());
  return out;
}

template <class RowSelector>
SpectrumResult solve_adaptive(const ModelParams& params, Truncation trunc,
                              int k, const DiagOptions& opts,
                              RowSelector&& select_rows) {
  params.validate();
  trunc.validate();
  while (true) {
    SpectrumResult r = solve_fixed(params, trunc, select_rows(trunc), k);
    if (r.tail_weight <= trunc.tail_tol) return r;
    if (trunc.n_tr >= opts.n_tr_cap) {
      throw TruncationNotConverged(
          "tail weight " + std::to_string(r.tail_weight) +
              " exceeds tolerance at n_tr=" + std::to_string(trunc.n_tr),
          trunc.n_tr, r.tail_weight);
    }
    trunc.n_tr = std::min(opts.n_tr_cap, std::max(1, 2 * trunc.n_tr));
  }
}

}  // namespace

SpectrumResult solve_lowest(const ModelParams& params, const Truncation& trunc,
                            int k, const DiagOptions& opts) {
  return solve_adaptive(params, trunc, k, opts, [](const Truncation&) {
    return std::vector<Eigen::Index>{};
  });
}

SpectrumResult solve_parity_sector(const ModelParams& params,
                                   const Truncation& trunc, Parity parity,
                                   int k, const DiagOptions& opts) {
  const double want = sign_of(parity);
  return solve_adaptive(params, trunc, k, opts, [want](const Truncation& t) {
    const Eigen::VectorXd p = parity_diag(t);
    std::vector<Eigen::Index> rows;
    for (Eigen::Index i = 0; i < p.size(); ++i)
      if (p(i) == want) rows.push_back(i);
    return rows;
  });
}

SpinXCoefficients spin_x_projection(const SpinFockVector& v) {
  const double s = 1.0 / std::sqrt(2.0);
  SpinXCoefficients c;
  c.plus.resize(static_cast<std::size_t>(v.n_tr + 1));
  c.minus.resize(static_cast<std::size_t>(v.n_tr + 1));
  for (int n = 0; n <= v.n_tr; ++n) {
    const double up = v.at(Spin::Up, n);
    const double dn = v.at(Spin::Down, n);
    c.plus[static_cast<std::size_t>(n)] = s * (up + dn);
    c.minus[static_cast<std::size_t>(n)] = s * (up - dn);
  }
  return c;
}

double mean_photon_ed(const SpinFockVector& v) {
  double s = 0.0;
  for (int n = 0; n <= v.n_tr; ++n) {
    const double up = v.at(Spin::Up, n);
    const double dn = v.at(Spin::Down, n);
    s += n * (up * up + dn * dn);
  }
  return s;
}

}  // namespace rabi
