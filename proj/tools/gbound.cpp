#include <CLI11.hpp>

#include <iostream>

#include "gronwall/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Bound curves, solution envelopes and Riccati comparison checks "
               "for integral inequalities"};
  gronwall::CliOptions opts;
  std::string output;
  int grid_n = 0;
  app.add_option("config", opts.config_path, "JSON job description")->required();
  auto* out_opt =
      app.add_option("--output", output, "Override the configured output path");
  auto* n_opt =
      app.add_option("--grid-n", grid_n, "Override the configured node count");
  app.add_flag("--quiet", opts.quiet, "Suppress progress narration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (out_opt->count() > 0) opts.output_override = output;
  if (n_opt->count() > 0) opts.grid_n_override = grid_n;
  return gronwall::run_job(opts, std::cout, std::cerr);
}
