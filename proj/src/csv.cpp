#include "gronwall/csv.hpp"

#include <cstdio>
#include <fstream>

#include "gronwall/errors.hpp"

namespace gronwall {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
  if (header.size() != columns.size())
    throw ArgumentError("csv: header and column counts differ");
  if (columns.empty()) throw ArgumentError("csv: no columns");
  const size_t rows = columns.front().size();
  for (const auto& col : columns)
    if (col.size() != rows) throw ArgumentError("csv: ragged columns");

  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("csv: cannot open output file '" + path + "'");
  for (size_t j = 0; j < header.size(); ++j) {
    if (j > 0) out << ',';
    out << header[j];
  }
  out << '\n';
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < columns.size(); ++j) {
      if (j > 0) out << ',';
      out << format_number(columns[j][i]);
    }
    out << '\n';
  }
  if (!out) throw ArgumentError("csv: write failed for '" + path + "'");
}

}  // namespace gronwall
