#include "rabi/model.hpp"

#include <cmath>
#include <string>

#include "rabi/errors.hpp"

namespace rabi {

ModelParams ModelParams::make(double delta, double omega, double g,
                              double tau) {
  ModelParams p{delta, omega, g, tau};
  p.validate();
  return p;
}

ModelParams ModelParams::from_lambda(double delta, double omega, double tau,
                                     double lambda) {
  ModelParams p{delta, omega, 0.0, tau};
  p.validate();
  p.g = lambda * std::sqrt(delta * omega) / (1.0 + tau);
  p.validate();
  return p;
}

ModelParams ModelParams::from_g_ratio(double delta, double omega, double tau,
                                      double g_over_gc1) {
  ModelParams p{delta, omega, 0.0, tau};
  p.validate();
  const auto gc1 = p.g_c1();
  if (!gc1) {
    throw InvalidTau("first-order critical coupling needs tau < 1, got tau=" +
                     std::to_string(tau));
  }
  p.g = g_over_gc1 * *gc1;
  p.validate();
  return p;
}

double ModelParams::lambda() const {
  return (1.0 + tau) * g / std::sqrt(delta * omega);
}

double ModelParams::g_c() const {
  return std::sqrt(delta * omega) / (1.0 + tau);
}

std::optional<double> ModelParams::g_c1() const {
  if (!(tau < 1.0)) return std::nullopt;
  return std::sqrt(delta * omega / (1.0 - tau * tau));
}

void ModelParams::validate() const {
  if (!std::isfinite(delta) || !std::isfinite(omega) || !std::isfinite(g) ||
      !std::isfinite(tau)) {
    throw InvalidArgument("model parameters must be finite");
  }
  if (!(omega > 0.0)) throw InvalidArgument("omega must be > 0");
  if (delta < 0.0) throw InvalidArgument("delta must be >= 0");
  if (g < 0.0) throw InvalidArgument("g must be >= 0");
  if (tau < 0.0) throw InvalidArgument("tau must be >= 0");
}

void Truncation::validate() const {
  if (n_tr < 0) throw InvalidArgument("n_tr must be >= 0");
  if (!(tail_tol > 0.0)) throw InvalidArgument("tail_tol must be > 0");
}

}  // namespace rabi
