#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace rabi::cli {

/// One row per (grid point, method).  Quantities a method does not define are
/// left empty in the table.
struct ScanRow {
  double lambda = 0.0;
  double g = 0.0;
  std::string method;
  std::optional<double> energy;
  std::optional<double> energy_scaled;
  std::optional<double> mean_photon;
  std::optional<double> beta1;
  std::optional<double> beta2;
  std::optional<double> c1;
  std::optional<double> c2;
  std::optional<double> xi;
  bool converged = false;

  bool operator==(const ScanRow&) const = default;
};

/// Shortest decimal that reads back to the same double (%.17g).
std::string format_double(double v);
std::string format_optional(const std::optional<double>& v);

const std::vector<std::string>& scan_columns();

void write_rows(const std::filesystem::path& path, const std::vector<ScanRow>& rows);
std::vector<ScanRow> read_rows(const std::filesystem::path& path);

/// Write a string only if the file content differs (keeps mtimes stable on
/// idempotent reruns).
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace rabi::cli
