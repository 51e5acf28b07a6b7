#ifndef HOMCOUNT_RUNNER_HPP
#define HOMCOUNT_RUNNER_HPP

#include "homcount/config.hpp"

namespace homcount {

struct RunResult {
  int exit_code = 0; // 0 ok, 2 config error, 3 numerical failure
  std::vector<std::string> files_written;
  std::string message;
};

/// Executes a parsed task, writing its CSV/JSON artifacts under
/// out_dir.  Deterministic given config + seed; partial results are
/// flagged inside the artifacts and signalled with exit code 3.
RunResult run(const TaskConfig& cfg, const std::string& out_dir);

} // namespace homcount

#endif // HOMCOUNT_RUNNER_HPP
