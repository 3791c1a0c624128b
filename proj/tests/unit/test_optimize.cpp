#include <gtest/gtest.h>

#include <cmath>

#include "rabi/errors.hpp"
#include "rabi/exactdiag.hpp"
#include "rabi/optimize.hpp"
#include "rabi/variational.hpp"

using namespace rabi;

TEST(Minimize, Quadratic) {
  const Objective f = [](std::span<const double> x) { return (x[0] - 2.0) * (x[0] - 2.0); };
  const MinimizeResult r = minimize_scalar_field(f, {{0.0}});
  EXPECT_NEAR(r.x[0], 2.0, 1e-8);
  EXPECT_NEAR(r.value, 0.0, 1e-15);
  EXPECT_TRUE(r.converged);
}

TEST(Minimize, Rosenbrock) {
  const Objective f = [](std::span<const double> x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 100.0 * std::pow(x[1] - x[0] * x[0], 2);
  };
  const MinimizeResult r = minimize_scalar_field(f, {{-1.0, 1.0}});
  EXPECT_NEAR(r.x[0], 1.0, 1e-6);
  EXPECT_NEAR(r.x[1], 1.0, 1e-6);
  EXPECT_TRUE(r.converged);
}

TEST(Minimize, BestOfSeveralStarts) {
  const Objective f = [](std::span<const double> x) {
    return std::pow(x[0] * x[0] - 1.0, 2) + 0.1 * x[0];
  };
  const MinimizeResult r = minimize_scalar_field(f, {{2.0}, {-2.0}});
  EXPECT_LT(r.x[0], 0.0);
  EXPECT_EQ(r.starts_tried, 2);
}

TEST(Minimize, InputValidation) {
  const Objective f = [](std::span<const double> x) { return x[0]; };
  EXPECT_THROW(minimize_scalar_field(f, {}), InvalidArgument);
  EXPECT_THROW(minimize_scalar_field(f, {{0, 0, 0, 0, 0, 0}}), InvalidArgument);
}

TEST(Minimize, EvaluationCapReportsUnconverged) {
  const Objective f = [](std::span<const double> x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 100.0 * std::pow(x[1] - x[0] * x[0], 2);
  };
  MinimizeOptions opts;
  opts.max_evals_per_start = 10;
  EXPECT_FALSE(minimize_scalar_field(f, {{-1.0, 1.0}}, opts).converged);
}

TEST(Minimize, SingleStateEndToEnd) {
  const ModelParams p = ModelParams::from_lambda(100.0, 1.0, 1.0, 0.5);
  const Objective f = [&](std::span<const double> x) { return energy_1css(p, {x[0], x[1]}); };
  const Ansatz1Params seed = asymptotic_params(p);
  const MinimizeResult r = minimize_scalar_field(f, {{seed.beta, seed.xi}});
  EXPECT_TRUE(r.converged);
  EXPECT_LT(r.grad_norm, 1e-5);
}

TEST(SolveAnsatz, DecoupledEveryKind) {
  const ModelParams p = ModelParams::make(3.0, 1.0, 0.0, 1.0);
  for (AnsatzTag tag : {AnsatzTag::CS1, AnsatzTag::CSS1, AnsatzTag::CS2, AnsatzTag::CSS2}) {
    const OptResult r = solve_ansatz(p, {tag, Parity::Even});
    EXPECT_NEAR(r.energy, -1.5, 1e-10) << to_string(tag);
    EXPECT_NEAR(r.mean_photon(), 0.0, 1e-6) << to_string(tag);
  }
}

TEST(SolveAnsatz, SqueezingBeatsCoherentState) {
  const ModelParams p = ModelParams::from_lambda(100.0, 1.0, 1.5, 1.0);
  const OptResult cs1 = solve_ansatz(p, {AnsatzTag::CS1, Parity::Even});
  const OptResult css1 = solve_ansatz(p, {AnsatzTag::CSS1, Parity::Even});
  EXPECT_LT(css1.energy, cs1.energy);
}

TEST(SolveAnsatz, NestingAndVariationalBound) {
  for (double tau : {0.5, 1.0, 1.5}) {
    const ModelParams p = ModelParams::from_lambda(10.0, 1.0, tau, 1.1);
    const double ed = solve_lowest(p, {256, 1e-12}, 1).energies[0];
    const double cs1 = solve_ansatz(p, {AnsatzTag::CS1}).energy;
    const double css1 = solve_ansatz(p, {AnsatzTag::CSS1}).energy;
    const double cs2 = solve_ansatz(p, {AnsatzTag::CS2}).energy;
    const double css2 = solve_ansatz(p, {AnsatzTag::CSS2}).energy;
    const double tol = 1e-8 * std::max(1.0, std::abs(ed));
    EXPECT_LE(ed, css2 + tol);
    EXPECT_LE(css2, css1 + tol);
    EXPECT_LE(css1, cs1 + tol);
    EXPECT_LE(css2, cs2 + tol);
  }
}

TEST(SolveAnsatz, Deterministic) {
  const ModelParams p = ModelParams::from_lambda(100.0, 1.0, 1.0, 1.05);
  const OptResult a = solve_ansatz(p, {AnsatzTag::CSS2});
  const OptResult b = solve_ansatz(p, {AnsatzTag::CSS2});
  EXPECT_EQ(a.energy, b.energy);
  const Ansatz2Params pa = a.as_two_state(), pb = b.as_two_state();
  EXPECT_EQ(pa.c1, pb.c1);
  EXPECT_EQ(pa.c2, pb.c2);
  EXPECT_EQ(pa.beta1, pb.beta1);
  EXPECT_EQ(pa.beta2, pb.beta2);
  EXPECT_EQ(pa.xi, pb.xi);
}

TEST(SolveAnsatz, CanonicalTwoStateLayout) {
  const ModelParams p = ModelParams::from_lambda(100.0, 1.0, 1.0, 1.2);
  const Ansatz2Params a = solve_ansatz(p, {AnsatzTag::CSS2}).as_two_state();
  EXPECT_GE(a.beta1, a.beta2);
  EXPECT_GE(a.c1, 0.0);
  EXPECT_NEAR(a.c1 * a.c1 + a.c2 * a.c2, 1.0, 1e-12);
}

TEST(SolveAnsatz, StationarySingleStateOptimum) {
  for (double lambda : {0.3, 0.5, 1.0, 1.3}) {
    const ModelParams p = ModelParams::from_lambda(100.0, 1.0, 1.0, lambda);
    const OptResult r = solve_ansatz(p, {AnsatzTag::CSS1});
    const auto a = std::get<Ansatz1Params>(r.params);
    const StationarityResiduals s = stationarity_residuals_iso(p, a);
    EXPECT_LT(std::abs(s.r_xi), 1e-6) << lambda;
    EXPECT_LT(std::abs(s.r_beta), 1e-6) << lambda;
    EXPECT_LT(r.grad_norm, 1e-5);
  }
}

TEST(SolveAnsatz, WarmStartNeverWorse) {
  const ModelParams p = ModelParams::from_lambda(100.0, 1.0, 1.0, 1.1);
  const OptResult prev = solve_ansatz(ModelParams::from_lambda(100.0, 1.0, 1.0, 1.09), {AnsatzTag::CSS2});
  const OptResult cold = solve_ansatz(p, {AnsatzTag::CSS2});
  SolveOptions opts;
  opts.warm_start = prev.as_two_state();
  const OptResult warm = solve_ansatz(p, {AnsatzTag::CSS2}, opts);
  EXPECT_LE(warm.energy, cold.energy + 1e-10);
}

TEST(SolveAnsatz, TinyBudgetCarriesBestResult) {
  const ModelParams p = ModelParams::from_lambda(100.0, 1.0, 1.0, 1.1);
  SolveOptions opts;
  opts.minimize.max_evals_per_start = 5;
  try {
    solve_ansatz(p, {AnsatzTag::CSS2}, opts);
    FAIL() << "expected NoConvergence";
  } catch (const NoConvergence& e) {
    EXPECT_TRUE(std::isfinite(e.best().energy));
  }
}

TEST(SolveAnsatz, RejectsOddSingleState) {
  const ModelParams p = ModelParams::make(3.0, 1.0, 0.5, 1.0);
  EXPECT_THROW(solve_ansatz(p, {AnsatzTag::CSS1, Parity::Odd}), InvalidArgument);
}

TEST(SolveAnsatz, OddStateAboveEvenBelowFirstOrderCoupling) {
  const ModelParams p = ModelParams::from_g_ratio(4.0, 1.0, 0.5, 0.8);
  const double even = solve_ansatz(p, {AnsatzTag::CSS2, Parity::Even}).energy;
  const double odd = solve_ansatz(p, {AnsatzTag::CSS2, Parity::Odd}).energy;
  EXPECT_LT(even, odd);
}

TEST(AnsatzKind, Names) {
  EXPECT_EQ(to_string(AnsatzKind{AnsatzTag::CSS2, Parity::Odd}), "CSS2-odd");
  EXPECT_EQ(to_string(AnsatzKind{AnsatzTag::CS1, Parity::Even}), "CS1");
  EXPECT_EQ(parse_ansatz_tag("CS2"), AnsatzTag::CS2);
  EXPECT_THROW(parse_ansatz_tag("CSS3"), InvalidArgument);
}
