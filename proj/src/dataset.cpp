#include "interferoq/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace iq {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void CurveDataset::add_row(std::vector<double> row, std::string flag) {
  if (row.size() != columns.size())
    throw ConfigError("CurveDataset: row width does not match columns");
  if (flag.empty()) {
    for (double v : row)
      if (!std::isfinite(v))
        throw ConfigError("CurveDataset: non-finite value in unflagged row");
  }
  rows.push_back(std::move(row));
  row_flags.push_back(std::move(flag));
}

std::string CurveDataset::to_csv() const {
  std::ostringstream out;
  out << "# command: " << command << "\n";
  out << "# version: " << kVersion << "\n";
  out << "# config: " << config_json << "\n";
  char hash[24];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(fnv1a(command + "\n" + config_json)));
  out << "# config_hash: " << hash << "\n";
  out << "# units:";
  for (const auto& col : columns) out << " " << col.name << "=" << col.unit;
  out << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i)
    out << (i ? "," : "") << columns[i].name;
  out << ",flag\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < rows[r].size(); ++i)
      out << (i ? "," : "") << format_double(rows[r][i]);
    out << "," << row_flags[r] << "\n";
  }
  return out.str();
}

void CurveDataset::write_csv(const std::string& path) const {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file: " + path);
  file << to_csv();
}

}  // namespace iq
