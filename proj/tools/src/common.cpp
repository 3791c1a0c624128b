#include "rabi/cli/commands.hpp"

#ifndef RABI_VERSION
#define RABI_VERSION "unknown"
#endif

namespace rabi::cli {

void write_meta(const RunConfig& cfg, const std::string& command, const nlohmann::json& extra) {
  nlohmann::json meta{{"command", command}, {"version", RABI_VERSION}, {"config", cfg}};
  for (const auto& [key, value] : extra.items()) meta[key] = value;
  write_text(cfg.out / "meta.json", meta.dump(2) + "\n");
}

std::optional<double> sign_change(const std::vector<double>& xs, const std::vector<double>& ys) {
  for (std::size_t i = 0; i + 1 < xs.size() && i + 1 < ys.size(); ++i) {
    const double a = ys[i], b = ys[i + 1];
    if (a == 0.0) return xs[i];
    if ((a < 0.0) != (b < 0.0) || b == 0.0) return xs[i] + (xs[i + 1] - xs[i]) * a / (a - b);
  }
  return std::nullopt;
}

}  // namespace rabi::cli
