#pragma once

// Command-line front end: `house`, `m`, `reproduce`, and `plot-f`
// subcommands over the library, with deterministic JSON/CSV/text output.
//
// Exit codes: 0 success, 1 claim failure, 2 usage or parse error,
// 3 precision exhausted (unresolved classification).

#include <string>

namespace cyclotome {

struct RunConfig {
  std::string command;           // house | m | reproduce | plot-f
  std::string input;             // RootSum text, or a case id for reproduce
  long precision_bits = 0;       // 0 = library defaults
  int workers = 0;               // 0 = all available; output never depends on it
  std::string output_path;       // empty = stdout
  std::string format = "json";   // json | csv | text
  std::string checkpoint_path;   // forwarded to long-running sweeps
  unsigned long long seed = 0;   // 0 = registry default for sampled sweeps
  long max_conductor = 0;        // 0 = library default
  bool all_cases = false;        // reproduce --all
  long grid_points = 1000;       // plot-f grid size (row budget)
  std::string exclusion = "1/1000";  // plot-f singularity exclusion radius
};

int cli_main(int argc, char** argv);

}  // namespace cyclotome
