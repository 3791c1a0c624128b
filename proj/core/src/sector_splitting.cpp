#include "rabi/exactdiag.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <vector>

#include "rabi/errors.hpp"

namespace rabi {

namespace {

using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<400, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

// A parity sector is the chain |s_0,0>, |s_1,1>, |s_2,2>, ... with the spin
// alternating; the even sector starts from Down, the odd one from Up.
struct Chain {
  std::vector<Real> diag;
  std::vector<Real> off_sq;  // squared couplings between j and j+1
};

Chain sector_chain(const ModelParams& p, int n_tr, Parity parity) {
  Chain c;
  c.diag.resize(static_cast<std::size_t>(n_tr + 1));
  c.off_sq.resize(static_cast<std::size_t>(n_tr));
  const Real omega(p.omega), half_delta(Real(p.delta) / 2);
  const Real g(p.g), gt(Real(p.g) * Real(p.tau));
  bool up = (parity == Parity::Odd);
  for (int j = 0; j <= n_tr; ++j) {
    c.diag[static_cast<std::size_t>(j)] = omega * j + (up ? half_delta : -half_delta);
    if (j < n_tr) {
      // Up,j -> Down,j+1 through a^+ s-; Down,j -> Up,j+1 through a^+ s+.
      const Real& coupling = up ? g : gt;
      c.off_sq[static_cast<std::size_t>(j)] = coupling * coupling * (j + 1);
    }
    up = !up;
  }
  return c;
}

// Number of eigenvalues strictly below x (negative LDL^T pivots).
int sturm_count(const Chain& c, const Real& x) {
  int count = 0;
  Real d = c.diag[0] - x;
  const Real tiny = std::numeric_limits<Real>::min() * 1e10;
  for (std::size_t j = 0;; ++j) {
    if (d < 0) ++count;
    if (j + 1 == c.diag.size()) break;
    if (abs(d) < tiny) d = tiny;
    d = c.diag[j + 1] - x - c.off_sq[j] / d;
  }
  return count;
}

Real lowest_eigenvalue(const Chain& c, double guess) {
  // Bracket from the double-precision estimate, widening until valid.
  Real width(1e-8 * std::max(1.0, std::abs(guess)));
  Real lo = Real(guess) - width, hi = Real(guess) + width;
  while (sturm_count(c, lo) > 0) {
    width *= 4;
    lo = Real(guess) - width;
  }
  while (sturm_count(c, hi) < 1) {
    width *= 4;
    hi = Real(guess) + width;
  }
  const Real resolution = ldexp(Real(std::max(1.0, std::abs(guess))), -380);
  while (hi - lo > resolution) {
    const Real mid = (lo + hi) / 2;
    if (sturm_count(c, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace

SectorSplitting sector_splitting(const ModelParams& params,
                                 const Truncation& trunc,
                                 const DiagOptions& opts) {
  const SpectrumResult even = solve_parity_sector(params, trunc, Parity::Even, 1, opts);
  const SpectrumResult odd = solve_parity_sector(params, trunc, Parity::Odd, 1, opts);
  // The tunnel splitting can sit 60+ orders below the energies, so the chain
  // is taken well past the double-precision adequacy point: the Fock tail
  // decays faster than exponentially and doubling the cutoff pushes the
  // truncation error below the arithmetic resolution.
  const int n_tr = std::max(512, 2 * std::max(even.n_tr_used, odd.n_tr_used));

  const Real e_even = lowest_eigenvalue(sector_chain(params, n_tr, Parity::Even),
                                        even.energies.front());
  const Real e_odd = lowest_eigenvalue(sector_chain(params, n_tr, Parity::Odd),
                                       odd.energies.front());
  SectorSplitting out;
  out.even_energy = static_cast<double>(e_even);
  out.odd_energy = static_cast<double>(e_odd);
  out.splitting = static_cast<double>(e_even - e_odd);
  out.n_tr_used = n_tr;
  return out;
}

}  // namespace rabi
