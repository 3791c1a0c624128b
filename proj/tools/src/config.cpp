#include "rabi/cli/config.hpp"

#include <cmath>
#include <fstream>

#include "rabi/errors.hpp"

namespace rabi::cli {

std::vector<double> inclusive_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw InvalidArgument("grid needs step > 0 and max >= min");
  const long count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count + 1));
  for (long i = 0; i <= count; ++i) xs.push_back(lo + static_cast<double>(i) * step);
  return xs;
}

std::vector<Parity> RunConfig::parities() const {
  if (parity == "even") return {Parity::Even};
  if (parity == "odd") return {Parity::Odd};
  if (parity == "both") return {Parity::Even, Parity::Odd};
  throw InvalidArgument("parity must be even, odd or both, got '" + parity + "'");
}

std::vector<double> RunConfig::lambda_grid() const {
  return inclusive_grid(lambda_min, lambda_max, lambda_step);
}

std::vector<double> RunConfig::g_ratio_grid() const { return inclusive_grid(g_min, g_max, g_step); }

void RunConfig::validate() const {
  ModelParams::make(delta, omega, 0.0, tau);
  truncation().validate();
  if (n_tr_cap < n_tr) throw InvalidArgument("ntr_cap must be >= ntr");
  parities();
  for (const std::string& m : methods)
    if (m != "ED") parse_ansatz_tag(m);
  if (source != "ED" && source != "CSS2") throw InvalidArgument("source must be ED or CSS2");
  if (workers < 0) throw InvalidArgument("workers must be >= 0");
  if (verify_samples < 1) throw InvalidArgument("verify_samples must be >= 1");
}

namespace {

template <typename T>
void read_if(const nlohmann::json& j, const char* key, T& field) {
  if (j.contains(key)) j.at(key).get_to(field);
}

}  // namespace

void from_json(const nlohmann::json& j, RunConfig& c) {
  read_if(j, "delta", c.delta);
  read_if(j, "omega", c.omega);
  read_if(j, "tau", c.tau);
  read_if(j, "lambda_min", c.lambda_min);
  read_if(j, "lambda_max", c.lambda_max);
  read_if(j, "lambda_step", c.lambda_step);
  read_if(j, "g_min", c.g_min);
  read_if(j, "g_max", c.g_max);
  read_if(j, "g_step", c.g_step);
  read_if(j, "methods", c.methods);
  read_if(j, "parity", c.parity);
  read_if(j, "ntr", c.n_tr);
  read_if(j, "tail_tol", c.tail_tol);
  read_if(j, "ntr_cap", c.n_tr_cap);
  read_if(j, "lambdas", c.lambdas);
  read_if(j, "source", c.source);
  read_if(j, "x_min", c.x_min);
  read_if(j, "x_max", c.x_max);
  read_if(j, "x_step", c.x_step);
  read_if(j, "verify_taus", c.verify_taus);
  read_if(j, "verify_samples", c.verify_samples);
  read_if(j, "seed", c.seed);
  read_if(j, "workers", c.workers);
  if (j.contains("out")) c.out = j.at("out").get<std::string>();
}

void to_json(nlohmann::json& j, const RunConfig& c) {
  // Worker count and output path do not change results; kept out so that
  // reruns elsewhere reproduce meta.json byte for byte.
  j = nlohmann::json{{"delta", c.delta},
                     {"omega", c.omega},
                     {"tau", c.tau},
                     {"lambda_min", c.lambda_min},
                     {"lambda_max", c.lambda_max},
                     {"lambda_step", c.lambda_step},
                     {"g_min", c.g_min},
                     {"g_max", c.g_max},
                     {"g_step", c.g_step},
                     {"methods", c.methods},
                     {"parity", c.parity},
                     {"ntr", c.n_tr},
                     {"tail_tol", c.tail_tol},
                     {"ntr_cap", c.n_tr_cap},
                     {"lambdas", c.lambdas},
                     {"source", c.source},
                     {"x_min", c.x_min},
                     {"x_max", c.x_max},
                     {"x_step", c.x_step},
                     {"verify_taus", c.verify_taus},
                     {"verify_samples", c.verify_samples},
                     {"seed", c.seed}};
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config " + path.string());
  RunConfig c;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("config " + path.string() + ": " + e.what());
  }
  from_json(j, c);
  return c;
}

}  // namespace rabi::cli
