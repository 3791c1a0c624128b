#pragma once

#include <vector>

#include "rabi/fock.hpp"
#include "rabi/model.hpp"

namespace rabi {

/// Real amplitudes on the spin-major basis |spin> (x) |n>.
struct SpinFockVector {
  std::vector<double> coeffs;
  int n_tr = 0;

  double at(Spin s, int n) const {
    return coeffs[static_cast<std::size_t>(basis_index(s, n, n_tr))];
  }
  double norm() const;
};

struct SpectrumResult {
  std::vector<double> energies;        // ascending
  std::vector<SpinFockVector> vectors; // unit norm, phase fixed
  int n_tr_used = 0;
  double tail_weight = 0.0;            // of vectors[0]
};

struct DiagOptions {
  /// Largest truncation tried by the adaptive doubling.
  int n_tr_cap = 4096;
};

/// Weight of the top five Fock levels (both spins) of v.
double tail_weight(const SpinFockVector& v);

/// Flip the global sign so the largest-magnitude amplitude is positive.
void fix_phase(SpinFockVector& v);

/// The k lowest eigenpairs of the full Hamiltonian.  The truncation doubles
/// until the ground vector's tail weight meets trunc.tail_tol.
SpectrumResult solve_lowest(const ModelParams& params, const Truncation& trunc,
                            int k, const DiagOptions& opts = {});

/// Lowest eigenpairs inside one parity sector; vectors are embedded back into
/// the full spin-Fock basis.
SpectrumResult solve_parity_sector(const ModelParams& params,
                                   const Truncation& trunc, Parity parity,
                                   int k = 1, const DiagOptions& opts = {});

/// Coefficients on |n>|+x> and |n>|-x>, with |+-x> = (|Up> +- |Down>)/sqrt2.
struct SpinXCoefficients {
  std::vector<double> plus;
  std::vector<double> minus;
};

SpinXCoefficients spin_x_projection(const SpinFockVector& v);

double mean_photon_ed(const SpinFockVector& v);

/// Lowest even-sector minus lowest odd-sector energy.
///
/// Deep in the superradiant regime the two parity states are tunnel-split by
/// amounts far below double resolution (e^-150 at delta/omega = 100).  Each
/// parity sector is a tridiagonal chain, so the lowest eigenvalues are located
/// by Sturm-count bisection in 400-bit arithmetic and only their difference
/// is rounded to double.
struct SectorSplitting {
  double even_energy = 0.0;
  double odd_energy = 0.0;
  double splitting = 0.0;  // even - odd
  int n_tr_used = 0;
};

SectorSplitting sector_splitting(const ModelParams& params,
                                 const Truncation& trunc,
                                 const DiagOptions& opts = {});

}  // namespace rabi
