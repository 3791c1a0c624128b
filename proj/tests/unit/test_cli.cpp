#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "rabi/cli/app.hpp"
#include "rabi/cli/commands.hpp"
#include "rabi/cli/verify.hpp"
#include "rabi/errors.hpp"
#include "rabi/exactdiag.hpp"
#include "rabi/oracle.hpp"
#include "rabi/variational.hpp"

using namespace rabi;
using namespace rabi::cli;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("rabi_cli_tests_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunConfig small_scan(const std::filesystem::path& out) {
  RunConfig c;
  c.delta = 10.0;
  c.lambda_min = 0.0;
  c.lambda_max = 1.2;
  c.lambda_step = 0.3;
  c.out = out;
  return c;
}

int run(std::vector<std::string> args, std::string* captured = nullptr) {
  args.insert(args.begin(), "rabi_css");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_app(static_cast<int>(argv.size()), argv.data(), out, err);
  if (captured) *captured = out.str() + err.str();
  return code;
}

}  // namespace

TEST(Table, RoundTripKeepsEmptyFields) {
  const auto dir = fresh_dir("table");
  std::vector<ScanRow> rows(2);
  rows[0] = {0.1, 0.5, "ED", -5.000000000000001, -0.5, 1e-300, {}, {}, {}, {}, {}, true};
  rows[1] = {0.2, 1.0, "CSS2", -5.1, -0.51, 0.3, 0.1 + 0.2, -1.0 / 3.0, 0.9, 0.1, 0.05, false};
  write_rows(dir / "t.tsv", rows);
  EXPECT_EQ(read_rows(dir / "t.tsv"), rows);
  const std::string text = slurp(dir / "t.tsv");
  EXPECT_NE(text.find("\t\t\t\t\t1\n"), std::string::npos);
}

TEST(Table, RejectsMalformedFiles) {
  const auto dir = fresh_dir("bad");
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "x.tsv") << "nope\n";
  EXPECT_THROW(read_rows(dir / "x.tsv"), InvalidArgument);
}

TEST(Config, FlagsOverrideFile) {
  const auto dir = fresh_dir("config");
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "c.json") << R"({"delta": 3, "tau": 0.5, "lambdas": [1.1], "methods": ["CS1"]})";
  const RunConfig c = load_config(dir / "c.json");
  EXPECT_EQ(c.delta, 3.0);
  EXPECT_EQ(c.tau, 0.5);
  EXPECT_EQ(c.methods, std::vector<std::string>{"CS1"});
  EXPECT_EQ(c.omega, 1.0);

  std::string log;
  EXPECT_EQ(run({"scan", "--config", (dir / "c.json").string(), "--delta", "2", "--lambda-max",
                 "0.2", "--lambda-step", "0.1", "--out", (dir / "o").string()},
                &log),
            0)
      << log;
  const auto meta = nlohmann::json::parse(slurp(dir / "o" / "meta.json"));
  EXPECT_EQ(meta["config"]["delta"], 2.0);
  EXPECT_EQ(meta["config"]["tau"], 0.5);
  EXPECT_EQ(read_rows(dir / "o" / "CS1.tsv").size(), 3u);
}

TEST(Config, Grid) {
  const std::vector<double> g = inclusive_grid(0.0, 1.5, 0.01);
  EXPECT_EQ(g.size(), 151u);
  EXPECT_NEAR(g.back(), 1.5, 1e-12);
  EXPECT_THROW(inclusive_grid(0.0, 1.0, 0.0), InvalidArgument);
}

TEST(App, UsageErrors) {
  std::string log;
  EXPECT_NE(run({}, &log), 0);
  EXPECT_NE(run({"scan", "--methods", "CSS9", "--out", fresh_dir("usage").string()}, &log), 0);
  EXPECT_NE(log.find("CSS9"), std::string::npos);
  EXPECT_NE(run({"levels", "--tau", "1.0", "--out", fresh_dir("usage2").string()}, &log), 0);
  EXPECT_NE(log.find("tau < 1"), std::string::npos);
}

TEST(SignChange, Interpolates) {
  EXPECT_NEAR(*sign_change({0.0, 1.0, 2.0}, {-1.0, -0.5, 1.5}), 1.25, 1e-15);
  EXPECT_FALSE(sign_change({0.0, 1.0}, {1.0, 2.0}));
}

TEST(Scan, WritesAllFiles) {
  const auto dir = fresh_dir("scan");
  RunConfig c = small_scan(dir);
  c.parity = "both";
  const ScanSummary s = cmd_scan(c);
  EXPECT_EQ(s.rows.size(), 5u * 7u);
  // At g = 0 the odd-parity infimum (|down,1>) is only reached as the two
  // Gaussians merge with opposite weights, so those rows stay unconverged.
  for (const ScanRow& r : s.rows) {
    const bool odd_origin = r.lambda == 0.0 && r.method.ends_with("-odd");
    EXPECT_EQ(r.converged, !odd_origin) << r.method << " " << r.lambda;
    if (odd_origin) EXPECT_NEAR(*r.energy, -4.0, 1e-6);
  }
  EXPECT_EQ(s.unconverged, 2);
  for (const char* f : {"ED.tsv", "CS1.tsv", "CSS1.tsv", "CS2.tsv", "CSS2.tsv", "CS2-odd.tsv",
                        "CSS2-odd.tsv", "combined.tsv", "meta.json", "plot.gp"})
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  const std::vector<ScanRow> ed = read_rows(dir / "ED.tsv");
  ASSERT_EQ(ed.size(), 5u);
  EXPECT_FALSE(ed[0].beta1);
  EXPECT_FALSE(ed[0].xi);
  const std::vector<ScanRow> cs1 = read_rows(dir / "CS1.tsv");
  EXPECT_FALSE(cs1[2].xi);
  EXPECT_FALSE(cs1[2].c2);
  EXPECT_TRUE(cs1[2].beta1);
  for (std::size_t i = 0; i < ed.size(); ++i) {
    EXPECT_NEAR(*ed[i].energy_scaled, *ed[i].energy / 10.0, 1e-15);
    EXPECT_LE(*ed[i].energy, *read_rows(dir / "CSS2.tsv")[i].energy + 1e-8);
  }
  EXPECT_EQ(read_rows(dir / "combined.tsv"), s.rows);
}

TEST(Scan, RestartRecomputesOnlyMissingRows) {
  const auto dir = fresh_dir("restart");
  RunConfig c = small_scan(dir);
  c.methods = {"ED", "CSS2"};
  cmd_scan(c);
  const std::string css2 = slurp(dir / "CSS2.tsv");
  const std::string combined = slurp(dir / "combined.tsv");

  EXPECT_EQ(cmd_scan(c).computed, 0);

  // Drop two rows and rerun: only those come back, byte for byte.
  std::vector<ScanRow> rows = read_rows(dir / "CSS2.tsv");
  rows.erase(rows.begin() + 1, rows.begin() + 3);
  write_rows(dir / "CSS2.tsv", rows);
  EXPECT_EQ(cmd_scan(c).computed, 2);
  EXPECT_EQ(slurp(dir / "CSS2.tsv"), css2);
  EXPECT_EQ(slurp(dir / "combined.tsv"), combined);
}

TEST(Scan, WorkerCountDoesNotChangeOutput) {
  const auto a = fresh_dir("workers1"), b = fresh_dir("workers3");
  RunConfig c = small_scan(a);
  c.methods = {"CSS1", "CSS2"};
  c.workers = 1;
  cmd_scan(c);
  c.out = b;
  c.workers = 3;
  cmd_scan(c);
  for (const char* f : {"CSS1.tsv", "CSS2.tsv", "combined.tsv", "meta.json"})
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
}

TEST(Levels, CrossingAtFirstOrderCoupling) {
  RunConfig c;
  c.delta = 4.0;
  c.tau = 0.5;
  c.g_min = 0.96;
  c.g_max = 1.04;
  c.g_step = 0.02;
  c.out = fresh_dir("levels");
  const LevelsSummary s = cmd_levels(c);
  EXPECT_NEAR(s.g_c1, std::sqrt(4.0 / 0.75), 1e-12);
  ASSERT_TRUE(s.crossing_css2);
  ASSERT_TRUE(s.crossing_ed);
  EXPECT_NEAR(*s.crossing_ed, 1.0, 0.01);
  EXPECT_NEAR(*s.crossing_css2, 1.0, 0.02);
  ASSERT_TRUE(s.photon_before && s.photon_after);
  // Both sector ground states are near-symmetric cats at the crossing.
  EXPECT_GT(*s.photon_after, *s.photon_before);
  EXPECT_LT(*s.photon_after - *s.photon_before, 0.05);
  EXPECT_TRUE(std::filesystem::exists(c.out / "levels.tsv"));
  for (const LevelRow& r : s.rows) {
    EXPECT_LE(std::min(*r.ed_even, *r.ed_odd), std::min(*r.css2_even, *r.css2_odd) + 1e-8);
  }
}

TEST(Levels, NearIsotropicStressCaseRuns) {
  RunConfig c;
  c.delta = 100.0;
  c.tau = 0.99;
  c.g_min = 0.99;
  c.g_max = 1.0;
  c.g_step = 0.01;
  c.n_tr_cap = 512;
  c.out = fresh_dir("levels099");
  const LevelsSummary s = cmd_levels(c);
  EXPECT_NEAR(s.g_c1, std::sqrt(100.0 / (1.0 - 0.9801)), 1e-9);
  EXPECT_EQ(s.rows.size(), 2u);
  for (const LevelRow& r : s.rows) EXPECT_TRUE(r.css2_even);
}

TEST(Wavefunction, SmallDetuningSinglePeak) {
  RunConfig c;
  c.delta = 1.0;
  c.out = fresh_dir("wave1");
  for (const WavefunctionResult& r : cmd_wavefunction(c)) {
    EXPECT_EQ(r.profile.peaks_plus, 1) << r.lambda;
    EXPECT_NEAR(r.profile.norm(), 1.0, 1e-3);
  }
  EXPECT_TRUE(std::filesystem::exists(c.out / "peaks_ED.tsv"));
  EXPECT_TRUE(std::filesystem::exists(c.out / "wavefunction_ED_1.1.tsv"));
}

TEST(Wavefunction, AnsatzMatchesExactProfile) {
  RunConfig c;
  const WavefunctionResult ed = ground_wavefunction(c, 1.1, "ED");
  const WavefunctionResult css2 = ground_wavefunction(c, 1.1, "CSS2");
  EXPECT_EQ(ed.profile.peaks_plus, 2);
  EXPECT_EQ(css2.profile.peaks_plus, 2);
  EXPECT_NEAR(css2.profile.norm(), 1.0, 1e-3);
  EXPECT_GT(std::abs(profile_overlap(ed.profile, css2.profile)), 0.99);
}

TEST(Wavefunction, AnalyticProfileMatchesFockState) {
  // The analytic two-Gaussian profile equals the spin-x projection of the
  // explicitly built ansatz state.
  const ModelParams p = ModelParams::make(10.0, 1.0, 1.0, 1.0);
  const Ansatz2Params a{0.8, 0.3, 1.2, -0.4, 0.1};
  const FockOracle oracle(p, {120, 1e-12});
  SpinFockVector v = oracle.state_2css(a, Parity::Even);
  const double n = std::sqrt(norm_2css(a));
  for (double& x : v.coeffs) x /= n;
  const SpinXCoefficients c = spin_x_projection(v);
  const std::vector<double> grid = make_grid(-6.0, 6.0, 0.5);
  const WavefunctionProfile fock = position_profile(c.plus, c.minus, grid, 1.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    const auto phi = [&](double y) {
      return (a.c1 * css_wavefunction({a.beta1, a.xi}, y, 1.0) +
              a.c2 * css_wavefunction({a.beta2, a.xi}, y, 1.0)) / n;
    };
    EXPECT_NEAR(fock.phi_plus[i], phi(x), 1e-10);
    EXPECT_NEAR(fock.phi_minus[i], -phi(-x), 1e-10);
  }
}

TEST(Verify, DefaultRunPasses) {
  RunConfig c;
  c.out = fresh_dir("verify");
  std::ostringstream os;
  EXPECT_EQ(cmd_verify(c, os), 0) << os.str();
  EXPECT_NE(os.str().find("PASS energy_2css_even[tau=1.5]"), std::string::npos);
  EXPECT_NE(os.str().find("stationarity[tau=1]"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(c.out / "verify.tsv"));
}

TEST(Verify, FlagsCorruptedAnisotropicTerm) {
  VerifyFunctionals f = VerifyFunctionals::library();
  f.energy_2css = [](const ModelParams& p, const Ansatz2Params& a, Parity par) {
    const EnergyTerms t = energy_terms_2css(p, a);
    const double s = sign_of(par);
    return (s * t.atom + t.photon + t.iso - s * t.ani) / t.norm;
  };
  RunConfig c;
  const std::vector<CheckResult> results = run_oracle_checks(c, f);
  bool flagged = false;
  for (const CheckResult& r : results) {
    if (r.name == "energy_2css_even[tau=1.5]" || r.name == "energy_2css_odd[tau=0.5]") {
      EXPECT_FALSE(r.passed) << r.name;
      flagged = true;
    }
    if (r.name == "energy_2css_even[tau=1]") EXPECT_TRUE(r.passed);
    if (r.name.rfind("energy_1css", 0) == 0) EXPECT_TRUE(r.passed);
  }
  EXPECT_TRUE(flagged);
}
