#ifndef HOMCOUNT_CONFIG_HPP
#define HOMCOUNT_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homcount/shift_graph.hpp"
#include "homcount/system.hpp"

namespace homcount {

enum class TaskKind {
  census_sft,
  census_smooth,
  periodic,
  prime_orbits,
  entropy,
  verify
};

std::string task_name(TaskKind k);

/// Thrown on malformed configuration; carries the line and field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& field, const std::string& what)
      : std::runtime_error("config line " + std::to_string(line) + ", " +
                           field + ": " + what),
        line_(line), field_(field) {}
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

struct TaskConfig {
  TaskKind task = TaskKind::verify;
  std::optional<ShiftGraph> graph;
  std::optional<System> system;

  // base periodic point: word of vertices (symbolic) or coordinates
  std::vector<int> pbar_word = {0};
  double point_x = 0.0, point_y = 0.0;

  int n_max = 40;
  double eps = 0.05;
  double delta = 0.1;
  long long budget = 10000000;
  std::uint64_t seed = 42;
  int threads = 1;
  int window_lo = -1, window_hi = -1; // growth-rate fit window
  std::vector<int> n_range;           // entropy windows
  int sample_count = 10000;
  std::string sample_law; // bernoulli | lebesgue (default by system)
  std::string out_csv = "";
  std::string out_json = "";
  std::string geometry_dump = "";

  // every key=value actually in effect, echoed into report headers
  std::map<std::string, std::string> echo;
};

/// Parses the structured-text configuration document.  Unknown keys,
/// out-of-range values and missing fields raise ConfigError with
/// line/field diagnostics (exit code 2 at the CLI).
TaskConfig parse_config(const std::string& document);

} // namespace homcount

#endif // HOMCOUNT_CONFIG_HPP
