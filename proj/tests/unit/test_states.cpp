#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rabi/errors.hpp"
#include "rabi/exactdiag.hpp"
#include "rabi/states.hpp"

using namespace rabi;

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double trapezoid(const std::vector<double>& xs, const std::vector<double>& ys) {
  double s = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) s += 0.5 * (xs[i] - xs[i - 1]) * (ys[i] + ys[i - 1]);
  return s;
}

WavefunctionProfile ed_profile(double delta, double lambda, double step) {
  const ModelParams p = ModelParams::from_lambda(delta, 1.0, 1.0, lambda);
  const SpectrumResult r = solve_lowest(p, {256, 1e-12}, 1);
  const SpinXCoefficients c = spin_x_projection(r.vectors[0]);
  const std::vector<double> grid = make_grid(-25.0, 25.0, step);
  return position_profile(c.plus, c.minus, grid, 1.0);
}

}  // namespace

TEST(Hermite, GroundAtOrigin) {
  EXPECT_NEAR(hermite_osc_wavefunction(0, 0.0, 1.0), std::pow(std::numbers::pi, -0.25), 1e-15);
  EXPECT_NEAR(hermite_osc_wavefunction(0, 0.0, 1.0), 0.751126, 1e-6);
}

TEST(Hermite, OddLevelVanishesAtOrigin) {
  for (double omega : {0.5, 1.0, 3.0}) EXPECT_EQ(hermite_osc_wavefunction(1, 0.0, omega), 0.0);
}

TEST(Hermite, HighLevelNormalized) {
  const std::vector<double> xs = make_grid(-15.0, 15.0, 0.01);
  std::vector<double> ys;
  for (double x : xs) ys.push_back(std::pow(hermite_osc_wavefunction(50, x, 1.0), 2));
  EXPECT_NEAR(trapezoid(xs, ys), 1.0, 1e-6);
}

TEST(Hermite, NoOverflowAtHighLevels) {
  const std::vector<double> lv = hermite_osc_levels(400, 20.0, 1.0);
  for (double v : lv) EXPECT_TRUE(std::isfinite(v));
  EXPECT_NEAR(lv[300], hermite_osc_wavefunction(300, 20.0, 1.0), 1e-15);
}

TEST(Hermite, RecurrenceMatchesFirstLevels) {
  const double omega = 2.0, x = 0.7, y = std::sqrt(omega) * x;
  const double psi0 = std::pow(omega / std::numbers::pi, 0.25) * std::exp(-y * y / 2.0);
  EXPECT_NEAR(hermite_osc_wavefunction(1, x, omega), psi0 * std::sqrt(2.0) * y, 1e-15);
  EXPECT_NEAR(hermite_osc_wavefunction(2, x, omega), psi0 * (2 * y * y - 1) / std::sqrt(2.0), 1e-15);
}

TEST(Eta, Properties) {
  EXPECT_EQ(squeeze_eta(0.0), 1.0);
  for (double xi : {-0.4, 0.1, 0.37}) {
    EXPECT_NEAR(squeeze_eta(xi) * squeeze_eta(-xi), 1.0, 1e-15);
    EXPECT_NEAR(squeeze_eta(xi) * std::exp(2 * xi), 1.0, 1e-14);
    EXPECT_NEAR(squeeze_eta(xi), std::cosh(2 * xi) - std::sinh(2 * xi), 1e-14);
    EXPECT_EQ((CoherentSqueezedParams{0.3, xi}.eta()), squeeze_eta(xi));
  }
}

TEST(CssAmplitudes, Vacuum) {
  const std::vector<double> c = css_fock_amplitudes({0.0, 0.0}, {20, 1e-12});
  EXPECT_EQ(c[0], 1.0);
  for (std::size_t n = 1; n < c.size(); ++n) EXPECT_EQ(c[n], 0.0);
}

TEST(CssAmplitudes, SqueezedVacuumClosedForm) {
  const double r = 0.4;
  const std::vector<double> c = css_fock_amplitudes({0.0, 0.2}, {60, 1e-12});
  for (int m = 0; 2 * m <= 60; ++m) {
    const double want = std::pow(std::cosh(r), -0.5) * std::pow(std::tanh(r), m) *
                        std::exp(0.5 * std::lgamma(2 * m + 1) - m * std::log(2.0) - std::lgamma(m + 1));
    EXPECT_NEAR(c[static_cast<std::size_t>(2 * m)], want, 1e-10);
    if (2 * m + 1 <= 60) EXPECT_NEAR(c[static_cast<std::size_t>(2 * m + 1)], 0.0, 1e-15);
  }
}

TEST(CssAmplitudes, PhotonNumber) {
  const std::vector<double> c = css_fock_amplitudes({1.3, 0.1}, {80, 1e-12});
  double norm = 0.0, photons = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    norm += c[n] * c[n];
    photons += static_cast<double>(n) * c[n] * c[n];
  }
  EXPECT_NEAR(norm, 1.0, 1e-12);
  EXPECT_NEAR(photons, std::pow(std::sinh(0.2), 2) + 1.69, 1e-9);
}

TEST(CssAmplitudes, TooSmallTruncationThrows) {
  EXPECT_THROW(css_fock_amplitudes({4.0, 0.0}, {10, 1e-12}), TruncationNotConverged);
}

TEST(CssAmplitudes, MatchesPositionSpaceGaussian) {
  const CoherentSqueezedParams p{0.8, 0.15};
  const std::vector<double> c = css_fock_amplitudes(p, {80, 1e-12});
  for (double x : {-2.0, -1.1, 0.0, 0.4, 1.5}) {
    const std::vector<double> lv = hermite_osc_levels(80, x, 1.0);
    EXPECT_NEAR(dot(c, lv), css_wavefunction(p, x, 1.0), 1e-12);
  }
}

TEST(Overlap, Specializations) {
  EXPECT_EQ(overlap_css(0.9, 0.9, 0.2, +1), 1.0);
  const double eta = squeeze_eta(0.2);
  EXPECT_NEAR(overlap_css(0.9, 0.9, 0.2, -1), std::exp(-2 * 0.81 * eta * eta), 1e-15);
  EXPECT_EQ(overlap_css(0.3, -1.2, 0.1, +1), overlap_css(-1.2, 0.3, 0.1, +1));
}

TEST(Overlap, SignIdentity) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 20; ++i) {
    const double b1 = u(rng), b2 = u(rng), xi = 0.4 * std::abs(u(rng)) / 3.0;
    EXPECT_EQ(overlap_css(b1, b2, xi, -1), overlap_css(b1, -b2, xi, +1));
    EXPECT_GT(overlap_css(b1, b2, xi, -1), 0.0);
    EXPECT_LE(overlap_css(b1, b2, xi, +1), 1.0);
  }
}

TEST(Overlap, FockOracleExample) {
  const Truncation t{120, 1e-12};
  const double xi = 0.15;
  const std::vector<double> f1 = css_fock_amplitudes({0.7, xi}, t);
  const std::vector<double> f2 = css_fock_amplitudes({-0.4, xi}, t);
  const std::vector<double> f2m = css_fock_amplitudes({0.4, xi}, t);
  EXPECT_NEAR(dot(f1, f2), overlap_css(0.7, -0.4, xi, +1), 1e-9);
  EXPECT_NEAR(dot(f1, f2m), overlap_css(0.7, -0.4, xi, -1), 1e-9);
}

TEST(Overlap, FockOracleRandomTriples) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ub(-3.0, 3.0);
  std::uniform_real_distribution<double> ux(0.0, 0.4);
  const Truncation t{160, 1e-12};
  for (int i = 0; i < 20; ++i) {
    const double b1 = ub(rng), b2 = ub(rng), xi = ux(rng);
    const std::vector<double> f1 = css_fock_amplitudes({b1, xi}, t);
    const std::vector<double> f2 = css_fock_amplitudes({b2, xi}, t);
    EXPECT_NEAR(dot(f1, f2), overlap_css(b1, b2, xi, +1), 1e-8);
  }
}

TEST(Grid, Construction) {
  const std::vector<double> g = make_grid(-1.0, 1.0, 0.5);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g.front(), -1.0);
  EXPECT_NEAR(g.back(), 1.0, 1e-15);
  EXPECT_THROW(make_grid(0.0, 1.0, 0.0), InvalidArgument);
}

TEST(Peaks, Counting) {
  const std::vector<double> one{0.0, 0.5, 1.0, 0.5, 0.0};
  const std::vector<double> two{0.0, 1.0, 0.2, -0.9, 0.0};
  const std::vector<double> ripple{0.0, 1.0, 0.0, 0.05, 0.0};
  EXPECT_EQ(count_peaks(one), 1);
  EXPECT_EQ(count_peaks(two), 2);
  EXPECT_EQ(count_peaks(ripple), 1);
}

TEST(Profile, PeaksAcrossTheTransition) {
  EXPECT_EQ(ed_profile(100.0, 0.9, 0.01).peaks_plus, 1);
  EXPECT_EQ(ed_profile(100.0, 1.1, 0.01).peaks_plus, 2);
  // At lambda = 1.5 the far packet is a perturbative admixture of relative
  // amplitude ~ delta omega / (8 alpha^2): below 10% in |phi|^2, still above 1%.
  const WavefunctionProfile deep = ed_profile(100.0, 1.5, 0.01);
  EXPECT_EQ(count_peaks(deep.phi_plus, 0.1), 1);
  EXPECT_EQ(count_peaks(ed_profile(100.0, 1.1, 0.01).phi_plus, 0.1), 2);
}

TEST(Profile, SmallDetuningSinglePeak) {
  for (double lambda : {0.9, 1.1, 1.5}) EXPECT_EQ(ed_profile(1.0, lambda, 0.01).peaks_plus, 1);
}

TEST(Profile, NormalizedAndGridInvariant) {
  for (double lambda : {0.9, 1.1, 1.5}) {
    const WavefunctionProfile fine = ed_profile(100.0, lambda, 0.01);
    const WavefunctionProfile coarse = ed_profile(100.0, lambda, 0.02);
    EXPECT_NEAR(fine.norm(), 1.0, 1e-3);
    EXPECT_EQ(fine.peaks_plus, coarse.peaks_plus);
    EXPECT_EQ(fine.peaks_minus, coarse.peaks_minus);
  }
}
