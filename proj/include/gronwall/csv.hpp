#pragma once

#include <string>
#include <vector>

namespace gronwall {

/// 17 significant digits ("%.17g"): re-parsing reproduces the exact double.
std::string format_number(double x);

/// Comma-separated values with a header row and LF line endings,
/// column-major input, one row per index.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

}  // namespace gronwall
