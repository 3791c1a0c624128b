#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "rabi/ansatz.hpp"
#include "rabi/cli/config.hpp"
#include "rabi/model.hpp"

namespace rabi::cli {

struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  int samples = 0;
  bool passed = false;
};

/// Functionals under test; defaults are the library's closed forms.  A test
/// may swap one out to confirm the suite notices.
struct VerifyFunctionals {
  std::function<double(const ModelParams&, const Ansatz1Params&)> energy_1css;
  std::function<double(const Ansatz1Params&)> mean_photon_1css;
  std::function<double(const ModelParams&, const Ansatz2Params&, Parity)> energy_2css;
  std::function<double(const Ansatz2Params&)> mean_photon_2css;
  std::function<double(double, double, double, int)> overlap_css;

  static VerifyFunctionals library();
};

/// Oracle equivalence, variational bounds and stationarity checks.
std::vector<CheckResult> run_verify(const RunConfig& cfg,
                                    const VerifyFunctionals& f = VerifyFunctionals::library());

/// Same as run_verify, but with only the Fock-oracle equivalence checks.
std::vector<CheckResult> run_oracle_checks(const RunConfig& cfg,
                                           const VerifyFunctionals& f = VerifyFunctionals::library());

std::string format_check(const CheckResult& r);

/// Prints one line per check; writes <out>/verify.tsv.  Returns 0 when all
/// pass.
int cmd_verify(const RunConfig& cfg, std::ostream& os);

}  // namespace rabi::cli
