#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcox {

// parsed command line, kept in one place so tests can drive the front end
struct run_config {
  std::string subcommand;
  std::string element_text;
  std::string format = "json";  // json | csv | text
  int jobs = 1;
  long long orbit_cap = 1000000;
  long long closure_cap = 1000000;
  int depth_cap = 16;
  std::string route = "graph";  // graph | brute
  long long seed = 0;           // reserved for sampled sweeps
  std::string suite = "quick";
  long long max_order = 0;  // 0 keeps the suite default
  std::string type_name;    // weyl --type
  std::string check;        // weyl --check
  std::vector<int> lambda;  // hurwitz-number parts
};

// exit codes: 0 success, 1 domain error, 2 cap exceeded, 3 verify mismatch,
// 64 usage error
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qcox
