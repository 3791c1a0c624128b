#include "rabi/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rabi/errors.hpp"

namespace rabi {

double squeeze_eta(double xi) { return std::exp(-2.0 * xi); }

double CoherentSqueezedParams::eta() const { return squeeze_eta(xi); }

std::vector<double> hermite_osc_levels(int n_max, double x, double omega) {
  std::vector<double> psi(static_cast<std::size_t>(std::max(n_max, 0) + 1));
  const double y = std::sqrt(omega) * x;
  psi[0] = std::pow(omega / std::numbers::pi, 0.25) * std::exp(-0.5 * y * y);
  if (n_max >= 1) psi[1] = std::sqrt(2.0) * y * psi[0];
  for (int n = 1; n < n_max; ++n) {
    psi[static_cast<std::size_t>(n + 1)] =
        std::sqrt(2.0 / (n + 1)) * y * psi[static_cast<std::size_t>(n)] -
        std::sqrt(double(n) / (n + 1)) * psi[static_cast<std::size_t>(n - 1)];
  }
  return psi;
}

double hermite_osc_wavefunction(int n, double x, double omega) {
  if (n < 0) throw InvalidArgument("oscillator level must be >= 0");
  return hermite_osc_levels(n, x, omega)[static_cast<std::size_t>(n)];
}

double css_wavefunction(const CoherentSqueezedParams& p, double x, double omega) {
  const double eta2 = p.eta() * p.eta();
  const double center = -std::sqrt(2.0 / omega) * p.beta;
  const double d = x - center;
  return std::pow(omega * eta2 / std::numbers::pi, 0.25) *
         std::exp(-0.5 * omega * eta2 * d * d);
}

std::vector<double> make_grid(double x_min, double x_max, double step) {
  if (!(step > 0.0) || !(x_max >= x_min)) {
    throw InvalidArgument("grid needs step > 0 and x_max >= x_min");
  }
  const auto n = static_cast<std::size_t>(std::floor((x_max - x_min) / step + 1e-9)) + 1;
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = x_min + step * static_cast<double>(i);
  return xs;
}

double WavefunctionProfile::norm() const {
  double s = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double a = phi_plus[i - 1] * phi_plus[i - 1] + phi_minus[i - 1] * phi_minus[i - 1];
    const double b = phi_plus[i] * phi_plus[i] + phi_minus[i] * phi_minus[i];
    s += 0.5 * (a + b) * (xs[i] - xs[i - 1]);
  }
  return s;
}

int count_peaks(std::span<const double> values, double floor_fraction) {
  double vmax = 0.0;
  for (double v : values) vmax = std::max(vmax, v * v);
  const double floor = floor_fraction * vmax;
  int peaks = 0;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    const double here = values[i] * values[i];
    if (here > floor && here > values[i - 1] * values[i - 1] &&
        here > values[i + 1] * values[i + 1]) {
      ++peaks;
    }
  }
  return peaks;
}

WavefunctionProfile position_profile(std::span<const double> c_plus,
                                     std::span<const double> c_minus,
                                     std::span<const double> grid, double omega) {
  if (c_plus.size() != c_minus.size()) {
    throw InvalidArgument("c_plus and c_minus must have equal length");
  }
  WavefunctionProfile prof;
  prof.xs.assign(grid.begin(), grid.end());
  prof.phi_plus.resize(grid.size());
  prof.phi_minus.resize(grid.size());
  const int n_max = static_cast<int>(c_plus.size()) - 1;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::vector<double> psi = hermite_osc_levels(n_max, grid[i], omega);
    double fp = 0.0, fm = 0.0;
    for (std::size_t n = 0; n < c_plus.size(); ++n) {
      fp += c_plus[n] * psi[n];
      fm += c_minus[n] * psi[n];
    }
    prof.phi_plus[i] = fp;
    prof.phi_minus[i] = fm;
  }
  prof.peaks_plus = count_peaks(prof.phi_plus);
  prof.peaks_minus = count_peaks(prof.phi_minus);
  return prof;
}

namespace {

double vec_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

// v <- exp(G) v by Taylor series, where apply_g writes G*in into out.
template <class Generator>
void apply_exponential(std::vector<double>& v, Generator&& apply_g) {
  std::vector<double> term = v, next(v.size());
  for (int k = 1; k < 400; ++k) {
    apply_g(term, next);
    const double inv_k = 1.0 / k;
    for (std::size_t i = 0; i < v.size(); ++i) {
      term[i] = next[i] * inv_k;
      v[i] += term[i];
    }
    if (vec_norm(term) < 1e-15 * vec_norm(v)) return;
  }
  throw Error("operator exponential series did not converge");
}

}  // namespace

std::vector<double> css_fock_amplitudes(const CoherentSqueezedParams& p,
                                        const Truncation& trunc) {
  trunc.validate();
  const int m = trunc.levels();
  std::vector<double> sq(static_cast<std::size_t>(m + 2));
  for (int n = 0; n < m + 2; ++n) sq[static_cast<std::size_t>(n)] = std::sqrt(double(n));

  std::vector<double> v(static_cast<std::size_t>(m), 0.0);
  v[0] = 1.0;

  // Squeeze: exp(xi (a^+2 - a^2)) in steps of at most 0.05 in xi.
  const int squeeze_steps = std::max(1, static_cast<int>(std::ceil(std::abs(p.xi) / 0.05)));
  const double xs = p.xi / squeeze_steps;
  for (int s = 0; s < squeeze_steps; ++s) {
    apply_exponential(v, [&](const std::vector<double>& in, std::vector<double>& out) {
      for (int n = 0; n < m; ++n) {
        double acc = 0.0;
        if (n >= 2) acc += sq[n] * sq[n - 1] * in[n - 2];            // a^+2
        if (n + 2 < m) acc -= sq[n + 1] * sq[n + 2] * in[n + 2];     // a^2
        out[n] = xs * acc;
      }
    });
  }

  // Displacement: exp(-beta (a^+ - a)) in steps of at most 0.25 in beta.
  const int disp_steps = std::max(1, static_cast<int>(std::ceil(std::abs(p.beta) / 0.25)));
  const double bs = p.beta / disp_steps;
  for (int s = 0; s < disp_steps; ++s) {
    apply_exponential(v, [&](const std::vector<double>& in, std::vector<double>& out) {
      for (int n = 0; n < m; ++n) {
        double acc = 0.0;
        if (n >= 1) acc += sq[n] * in[n - 1];          // a^+
        if (n + 1 < m) acc -= sq[n + 1] * in[n + 1];   // a
        out[n] = -bs * acc;
      }
    });
  }

  double tail = 0.0;
  for (int n = std::max(0, m - 5); n < m; ++n) tail += v[n] * v[n];
  if (tail > trunc.tail_tol) {
    throw TruncationNotConverged("coherent-squeezed state leaks onto the top Fock levels (tail " +
                                     std::to_string(tail) + ")",
                                 trunc.n_tr, tail);
  }
  const double nrm = vec_norm(v);
  for (double& c : v) c /= nrm;
  return v;
}

double overlap_css(double beta_k, double beta_kp, double xi, int sign) {
  const double eta = squeeze_eta(xi);
  const double d = sign >= 0 ? beta_k - beta_kp : beta_k + beta_kp;
  return std::exp(-0.5 * eta * eta * d * d);
}

}  // namespace rabi
