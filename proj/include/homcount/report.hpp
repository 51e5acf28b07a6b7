#ifndef HOMCOUNT_REPORT_HPP
#define HOMCOUNT_REPORT_HPP

#include <string>
#include <vector>

#include "homcount/census.hpp"

namespace homcount {

struct Claim {
  std::string id;       // log-type | exp-type | mendoza-eq | prime-orbit | ...
  double computed = 0;  // measured value
  double target = 0;    // theoretical prediction
  double tolerance = 0; // allowed |computed - target|
  std::string verdict;  // pass | fail | inconclusive
  std::string note;
};

struct VerificationReport {
  int schema = 1;
  std::vector<Claim> claims;
  std::vector<std::pair<std::string, std::string>> header; // echoed config

  bool all_pass() const {
    for (const auto& c : claims)
      if (c.verdict == "fail") return false;
    return true;
  }
  std::string to_json() const;
};

/// Builds a claim from |computed - target| <= tolerance.
Claim make_claim(const std::string& id, double computed, double target,
                 double tolerance, const std::string& note = "");

struct TheoryComparison {
  std::map<long long, double> log_over_n; // (1/n) log count
  double slope = 0.0;
  std::map<long long, double> ratio;      // count * e^{-n h}
  double ratio_min = 0.0, ratio_max = 0.0;
  bool inconclusive = false;              // empty or all-zero table
  Claim log_type;                         // slope vs h
  Claim exp_type;                         // ratio pinched away from 0/inf
};

/// Growth and ratio diagnostics of a census table against the entropy
/// value h over [window_lo, window_hi], with verdicts at the given
/// tolerances.  Never throws on empty input: reports `inconclusive`.
TheoryComparison compare_to_theory(const CensusTable& table, double h,
                                   long long window_lo, long long window_hi,
                                   double slope_tol, double ratio_band);

/// 12-significant-digit fixed formatting used by every report writer.
std::string format_real(double x);

/// Write-then-rename so partial files are never observed.
void atomic_write(const std::string& path, const std::string& content);

} // namespace homcount

#endif // HOMCOUNT_REPORT_HPP
