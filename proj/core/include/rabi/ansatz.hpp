#pragma once

#include <string>
#include <string_view>

#include "rabi/model.hpp"

namespace rabi {

/// Single coherent-squeezed state per spin branch.  The parity constraint
/// C1 = -C2 = 1/sqrt2, beta1 = -beta2 = beta, xi1 = xi2 = xi is built into the
/// energy functional.
struct Ansatz1Params {
  double beta = 0.0;
  double xi = 0.0;
};

/// Superposition C1|f(beta1)> + C2|f(beta2)> on each spin branch with a shared
/// squeezing.  Not normalized; energies are Rayleigh quotients.
struct Ansatz2Params {
  double c1 = 1.0;
  double c2 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double xi = 0.0;
};

enum class AnsatzTag { CS1, CSS1, CS2, CSS2 };

struct AnsatzKind {
  AnsatzTag tag = AnsatzTag::CSS2;
  Parity parity = Parity::Even;

  bool squeezed() const { return tag == AnsatzTag::CSS1 || tag == AnsatzTag::CSS2; }
  bool two_state() const { return tag == AnsatzTag::CS2 || tag == AnsatzTag::CSS2; }

  /// Throws InvalidArgument for an odd single-state kind.
  void validate() const;
};

std::string_view to_string(AnsatzTag tag);
/// "CS1", "CSS2", ... ; odd kinds get a "-odd" suffix.
std::string to_string(const AnsatzKind& kind);
AnsatzTag parse_ansatz_tag(std::string_view name);

/// The single-state ansatz written as a two-state one (C2 = 0, C1 = 1/sqrt2).
inline Ansatz2Params embed(const Ansatz1Params& a) {
  return {0.70710678118654752440, 0.0, a.beta, a.beta, a.xi};
}

}  // namespace rabi
