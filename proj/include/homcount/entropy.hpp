#ifndef HOMCOUNT_ENTROPY_HPP
#define HOMCOUNT_ENTROPY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "homcount/system.hpp"

namespace homcount {

/// Finite stand-in for orbit sampling of an invariant measure.
struct OrbitSample {
  std::vector<RatPoint> points;
  std::string law;   // bernoulli-itinerary | lebesgue-torus | user
  int horizon = 0;   // largest iterate the sample supports
  std::uint64_t seed = 0;
};

/// Bernoulli(1/2) itineraries on the horseshoe, realized as exact
/// points; every point is non-escaping up to the horizon both ways.
OrbitSample sample_bernoulli_horseshoe(const AffineHorseshoe& h, int count,
                                       int horizon, std::uint64_t seed);

/// Uniform (Lebesgue) sample on the torus.
OrbitSample sample_lebesgue_torus(int count, int horizon, std::uint64_t seed);

/// max over 0 <= i < n of d(f^i x, f^i y).
double bowen_distance(const System& sys, const RatPoint& x, const RatPoint& y,
                      int n);

/// Greedy maximal (n,eps)-separated subset, scanned in sample order;
/// returns indices into sample.points.
std::vector<int> max_separated(const System& sys, const OrbitSample& sample,
                               int n, double eps);

struct BowenCoverReport {
  int n = 0;
  double eps = 0.0;
  double delta = 0.0;
  long cover_size = 0;
  long separated_size = 0;
  double log_cover_over_n = 0.0;
};

/// Greedy cover of the sample by (n,eps)-Bowen balls centered at sample
/// points (descending coverage, ties by sample order) until at least a
/// (1-delta) fraction of the sample is covered.
BowenCoverReport cover_estimate(const System& sys, const OrbitSample& sample,
                                int n, double eps, double delta);

struct KatokReport {
  std::vector<BowenCoverReport> per_n;
  double slope = 0.0;           // LS fit of log cover_size over n
  double slope_separated = 0.0; // same for the separated-set sizes
  bool degenerate = false;      // all cover sizes equal 1
  double eps = 0.0, delta = 0.0;
  std::string sample_law;
  std::uint64_t seed = 0;
};

/// Entropy estimate: least-squares slope of log N(n,eps,delta) over the
/// given n values, with the separated-set lower variant reported too.
KatokReport katok_entropy(const System& sys, const OrbitSample& sample,
                          const std::vector<int>& n_range, double eps,
                          double delta);

} // namespace homcount

#endif // HOMCOUNT_ENTROPY_HPP
