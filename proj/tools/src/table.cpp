#include "rabi/cli/table.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rabi/errors.hpp"

namespace rabi::cli {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_optional(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

const std::vector<std::string>& scan_columns() {
  static const std::vector<std::string> cols{"lambda", "g",     "method", "energy",
                                             "energy_scaled", "mean_photon", "beta1",
                                             "beta2", "c1", "c2", "xi", "converged"};
  return cols;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, '\t')) out.push_back(cell);
  if (!line.empty() && line.back() == '\t') out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw InvalidArgument("bad number '" + s + "'");
  return v;
}

std::optional<double> parse_optional(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_double(s);
}

}  // namespace

void write_text(const std::filesystem::path& path, const std::string& text) {
  {
    std::ifstream in(path, std::ios::binary);
    if (in) {
      std::ostringstream old;
      old << in.rdbuf();
      if (old.str() == text) return;
    }
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

void write_rows(const std::filesystem::path& path, const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  const auto& cols = scan_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "\t" : "") << cols[i];
  os << '\n';
  for (const ScanRow& r : rows) {
    os << format_double(r.lambda) << '\t' << format_double(r.g) << '\t' << r.method << '\t'
       << format_optional(r.energy) << '\t' << format_optional(r.energy_scaled) << '\t'
       << format_optional(r.mean_photon) << '\t' << format_optional(r.beta1) << '\t'
       << format_optional(r.beta2) << '\t' << format_optional(r.c1) << '\t'
       << format_optional(r.c2) << '\t' << format_optional(r.xi) << '\t'
       << (r.converged ? 1 : 0) << '\n';
  }
  write_text(path, os.str());
}

std::vector<ScanRow> read_rows(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || split_tabs(line) != scan_columns())
    throw InvalidArgument(path.string() + ": unexpected header");
  std::vector<ScanRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_tabs(line);
    if (f.size() != scan_columns().size())
      throw InvalidArgument(path.string() + ": wrong field count in '" + line + "'");
    ScanRow r;
    r.lambda = parse_double(f[0]);
    r.g = parse_double(f[1]);
    r.method = f[2];
    r.energy = parse_optional(f[3]);
    r.energy_scaled = parse_optional(f[4]);
    r.mean_photon = parse_optional(f[5]);
    r.beta1 = parse_optional(f[6]);
    r.beta2 = parse_optional(f[7]);
    r.c1 = parse_optional(f[8]);
    r.c2 = parse_optional(f[9]);
    r.xi = parse_optional(f[10]);
    if (f[11] != "0" && f[11] != "1") throw InvalidArgument("converged must be 0 or 1");
    r.converged = f[11] == "1";
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace rabi::cli
