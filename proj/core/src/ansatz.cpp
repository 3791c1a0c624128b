#include "rabi/ansatz.hpp"

#include "rabi/errors.hpp"

namespace rabi {

void AnsatzKind::validate() const {
  if (parity == Parity::Odd && !two_state()) {
    throw InvalidArgument("odd parity needs a two-state ansatz (CS2 or CSS2)");
  }
}

std::string_view to_string(AnsatzTag tag) {
  switch (tag) {
    case AnsatzTag::CS1: return "CS1";
    case AnsatzTag::CSS1: return "CSS1";
    case AnsatzTag::CS2: return "CS2";
    case AnsatzTag::CSS2: return "CSS2";
  }
  return "?";
}

std::string to_string(const AnsatzKind& kind) {
  std::string s(to_string(kind.tag));
  if (kind.parity == Parity::Odd) s += "-odd";
  return s;
}

AnsatzTag parse_ansatz_tag(std::string_view name) {
  if (name == "CS1") return AnsatzTag::CS1;
  if (name == "CSS1") return AnsatzTag::CSS1;
  if (name == "CS2") return AnsatzTag::CS2;
  if (name == "CSS2") return AnsatzTag::CSS2;
  throw InvalidArgument("unknown ansatz '" + std::string(name) + "'");
}

}  // namespace rabi
