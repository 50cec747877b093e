#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "interferoq/errors.hpp"

namespace iq {

inline constexpr const char* kVersion = "0.1.0";

struct Column {
  std::string name;
  std::string unit;  // e.g. "beta^2/gamma^3", "dimensionless"
};

// Machine-readable figure dataset: '#'-prefixed provenance header,
// RFC-4180 body, 17-significant-digit floats.
struct CurveDataset {
  std::string command;      // CLI command that produced the data
  std::string config_json;  // fully resolved config, compact JSON
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> row_flags;  // "", "argmax", "argmin", "skipped", ...

  void add_row(std::vector<double> row, std::string flag = "");
  std::string to_csv() const;
  void write_csv(const std::string& path) const;
};

// Stable 64-bit FNV-1a, used for the provenance config hash.
std::uint64_t fnv1a(const std::string& data);

// Shortest round-trippable decimal form (%.17g).
std::string format_double(double value);

}  // namespace iq
