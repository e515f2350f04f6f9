#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace gronwall {

struct CliOptions {
  std::string config_path;
  std::optional<std::string> output_override;
  std::optional<int> grid_n_override;
  bool quiet = false;
};

/// Execute the job described by a JSON config file (modes: bound, envelope,
/// linsys, riccati-compare, verify-suite). Writes CSV artifacts and a report
/// to `out`. Returns 0 on success with all verifications passing, 1 on
/// verification failure, 2 on input or validation errors (diagnostics on
/// `err`).
int run_job(const CliOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace gronwall
