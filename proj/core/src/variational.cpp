#include "rabi/variational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "rabi/errors.hpp"
#include "rabi/states.hpp"

namespace rabi {

double energy_1css(const ModelParams& params, const Ansatz1Params& a) {
  const double eta2 = squeeze_eta(a.xi) * squeeze_eta(a.xi);
  const double sh = std::sinh(2.0 * a.xi);
  const double beta = a.beta;
  return params.omega * (sh * sh + beta * beta) - 2.0 * beta * params.alpha() -
         (0.5 * params.delta + 2.0 * params.gamma() * beta * eta2) *
             std::exp(-2.0 * beta * beta * eta2);
}

double mean_photon_1css(const Ansatz1Params& a) {
  const double sh = std::sinh(2.0 * a.xi);
  return sh * sh + a.beta * a.beta;
}

StationarityResiduals stationarity_residuals_iso(const ModelParams& params,
                                                 const Ansatz1Params& a) {
  if (!params.isotropic()) {
    throw NotIsotropic("stationarity residuals are defined for tau = 1 only");
  }
  const double b = a.beta;
  const double eta2 = squeeze_eta(a.xi) * squeeze_eta(a.xi);
  const double damp = std::exp(-4.0 * a.xi) * std::exp(-2.0 * b * b * eta2);
  StationarityResiduals r;
  r.r_xi = params.omega * (std::exp(4.0 * a.xi) - std::exp(-4.0 * a.xi)) -
           4.0 * params.delta * b * b * damp;
  r.r_beta = (params.omega * b - params.g) + params.delta * b * damp;
  return r;
}

Ansatz1Params asymptotic_params(const ModelParams& params) {
  if (!params.isotropic()) {
    throw NotIsotropic("asymptotic parameters are stated for tau = 1 only");
  }
  Ansatz1Params a;
  if (params.g == 0.0) return a;
  a.beta = params.g / params.delta;
  a.xi = 0.125 * std::log1p(4.0 * params.g * params.g / (params.omega * params.delta));
  return a;
}

namespace {

// Adds the (k, l) pair contributions selected by `keep` to `t`.
template <class Keep>
void accumulate_terms(const ModelParams& params, const Ansatz2Params& a, Keep keep, EnergyTerms& t) {
  const std::array<double, 2> c{a.c1, a.c2};
  const std::array<double, 2> b{a.beta1, a.beta2};
  const double eta = squeeze_eta(a.xi);
  const double eta2 = eta * eta;
  const double sh = std::sinh(2.0 * a.xi);
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t l = 0; l < 2; ++l) {
      if (!keep(k, l)) continue;
      const double cc = c[k] * c[l];
      const double diff = b[k] - b[l];
      const double sum = b[k] + b[l];
      const double same = overlap_css(b[k], b[l], a.xi, +1);      // <+f_k|+f_l>
      const double opposite = overlap_css(b[k], b[l], a.xi, -1);  // <+f_k|-f_l>
      t.norm += 2.0 * cc * same;
      t.atom -= params.delta * cc * opposite;
      t.photon += 2.0 * params.omega * cc * same *
                  (b[k] * b[l] + sh * eta * diff * diff + sh * sh * (1.0 - eta2 * diff * diff));
      t.iso -= 2.0 * params.alpha() * cc * sum * same;
      t.ani -= 2.0 * params.gamma() * eta2 * cc * sum * opposite;
    }
  }
}

}  // namespace

EnergyTerms energy_terms_2css(const ModelParams& params, const Ansatz2Params& a) {
  EnergyTerms t;
  accumulate_terms(params, a, [](std::size_t, std::size_t) { return true; }, t);
  return t;
}

double norm_2css(const Ansatz2Params& a) {
  return 2.0 * (a.c1 * a.c1 + a.c2 * a.c2 +
                2.0 * a.c1 * a.c2 * overlap_css(a.beta1, a.beta2, a.xi, +1));
}

namespace {

void require_norm(double norm) {
  if (!(norm >= 1e-12)) {
    throw DegenerateAnsatz("two-state ansatz norm " + std::to_string(norm) +
                               " is below 1e-12",
                           norm);
  }
}

}  // namespace

double energy_2css(const ModelParams& params, const Ansatz2Params& a, Parity parity) {
  const EnergyTerms t = energy_terms_2css(params, a);
  require_norm(t.norm);
  const double s = sign_of(parity);
  return (s * t.atom + t.photon + t.iso + s * t.ani) / t.norm;
}

double mean_photon_2css(const Ansatz2Params& a) {
  // Photon term does not depend on the couplings; omega = 1 gives <a^+a>.
  const EnergyTerms t = energy_terms_2css(ModelParams{0.0, 1.0, 0.0, 1.0}, a);
  require_norm(t.norm);
  return t.photon / t.norm;
}

double parity_gap_2css(const ModelParams& params, const Ansatz2Params& a) {
  const EnergyTerms t = energy_terms_2css(params, a);
  require_norm(t.norm);
  return 2.0 * (t.atom + t.ani) / t.norm;
}

double tunneling_gap_2css(const ModelParams& params, const Ansatz2Params& a, Parity parity) {
  if (!(a.beta1 * a.beta2 < 0.0)) return parity_gap_2css(params, a);
  // Branches on opposite sides: the packet c1|up,b1> + s c2|dn,-b2> is kept
  // fixed by flipping c2 with the parity.  Split the pair sums into the
  // O(1) part (A over N) and the tunneling part (B over M); then
  // E_even - E_odd = 2 (B N - A M) / (N^2 - M^2).
  Ansatz2Params even = a;
  if (parity == Parity::Odd) even.c2 = -even.c2;
  EnergyTerms diag, cross;
  accumulate_terms(params, even, [](std::size_t k, std::size_t l) { return k == l; }, diag);
  accumulate_terms(params, even, [](std::size_t k, std::size_t l) { return k != l; }, cross);
  const double big_n = diag.norm;
  const double small_m = cross.norm;
  const double big_a = diag.photon + diag.iso + cross.atom + cross.ani;
  const double small_b = cross.photon + cross.iso + diag.atom + diag.ani;
  const double denom = (big_n - small_m) * (big_n + small_m);
  require_norm(std::min(big_n + small_m, big_n - small_m));
  return 2.0 * (small_b * big_n - big_a * small_m) / denom;
}

}  // namespace rabi
