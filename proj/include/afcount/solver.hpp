#ifndef AFCOUNT_SOLVER_HPP
#define AFCOUNT_SOLVER_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "afcount/af.hpp"
#include "afcount/proj.hpp"

namespace afc {

enum class Task { Count, CredCount, PCount, Cred, Skep, EnumerateOracle };
Task task_from_string(const std::string& name);

struct RunConfig {
  std::string input_path;
  std::string format;  // "apx", "tgf" or "" (sniff from extension)
  SemanticsKind semantics = SemanticsKind::Stable;
  Task task = Task::Count;
  std::string arg;                       // credulous argument name
  std::optional<std::vector<std::string>> projection;
  uint64_t seed = 0;
  int td_passes = 10;
  bool oracle_verify = false;
  bool trace = false;
  bool stats = false;
  int threads = 1;
  int oracle_cap = 25;
};

struct RunStats {
  int width = 0;       // width of the TD used
  int nodes = 0;       // nice-TD node count
  size_t max_table = 0;
  mpz_class count;     // the count behind the answer
  double ms_td = 0, ms_dp = 0, ms_purge = 0, ms_proj = 0;
};

struct RunResult {
  std::string output;  // the single result line (without newline)
  RunStats stats;
};

// Full pipeline on an already parsed framework.
RunResult solve(const Framework& f, const RunConfig& cfg, std::ostream* trace_out = nullptr);

// Parses cfg.input_path, runs the pipeline and prints the result line (plus
// the stats record if requested) to `out`. Oracle verification failures
// throw Error{OracleMismatch}.
void run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Convenience used by both the solver and the tests.
Framework load_framework(const std::string& path, const std::string& format);

}  // namespace afc

#endif
