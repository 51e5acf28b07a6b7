#ifndef HOMCOUNT_CENSUS_HPP
#define HOMCOUNT_CENSUS_HPP

#include <map>
#include <string>

#include "homcount/bigint.hpp"

namespace homcount {

/// Exact n -> count table with the parameters that reproduce it.
struct CensusTable {
  std::map<long long, BigInt> entries;
  std::string system_id;
  std::string parameters;
  bool truncated = false;     // budget ran out before the requested n_max
  long long last_complete = -1;
};

struct GrowthRate {
  double slope = 0.0;
  double intercept = 0.0;
  int points_used = 0;
  std::vector<long long> skipped_zero; // n values with zero count
  std::map<long long, double> log_over_n; // (1/n) log count per usable n
};

/// Least-squares slope of log(count) against n over [n_lo, n_hi];
/// zero counts are skipped, not treated as -inf.  Throws when fewer
/// than 3 usable points remain.
GrowthRate growth_rate(const CensusTable& t, long long n_lo, long long n_hi);

} // namespace homcount

#endif // HOMCOUNT_CENSUS_HPP
