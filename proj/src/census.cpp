#include "homcount/census.hpp"

#include <stdexcept>

namespace homcount {

GrowthRate growth_rate(const CensusTable& t, long long n_lo, long long n_hi) {
  GrowthRate out;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int k = 0;
  for (const auto& [n, count] : t.entries) {
    if (n < n_lo || n > n_hi) continue;
    if (count == 0) {
      out.skipped_zero.push_back(n);
      continue;
    }
    const double y = log_big(count);
    if (n > 0) out.log_over_n[n] = y / static_cast<double>(n);
    const double x = static_cast<double>(n);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++k;
  }
  if (k < 3)
    throw std::invalid_argument(
        "growth_rate needs at least 3 nonzero entries in the window");
  const double denom = k * sxx - sx * sx;
  out.slope = (k * sxy - sx * sy) / denom;
  out.intercept = (sy - out.slope * sx) / k;
  out.points_used = k;
  return out;
}

} // namespace homcount
