#include "homcount/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace homcount {

namespace {

double u53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// forward-orbit positions for every sample point, precomputed once
std::vector<std::vector<std::array<double, 2>>> sample_orbits(
    const System& sys, const OrbitSample& sample, int n) {
  std::vector<std::vector<std::array<double, 2>>> orbs;
  orbs.reserve(sample.points.size());
  for (const auto& p : sample.points)
    orbs.push_back(orbit_positions(sys, p, n));
  return orbs;
}

double orbit_dist(const System& sys,
                  const std::vector<std::array<double, 2>>& a,
                  const std::vector<std::array<double, 2>>& b, int n) {
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    m = std::max(m, dist_d(sys, a[i][0], a[i][1], b[i][0], b[i][1]));
  }
  return m;
}

// true as soon as the orbits exceed eps somewhere in the window
bool orbit_separated(const System& sys,
                     const std::vector<std::array<double, 2>>& a,
                     const std::vector<std::array<double, 2>>& b, int n,
                     double eps) {
  for (int i = 0; i < n; ++i)
    if (dist_d(sys, a[i][0], a[i][1], b[i][0], b[i][1]) > eps) return true;
  return false;
}

// time-0 spatial hash: only points within eps at time 0 can be
// Bowen-close, so everything else is pruned before orbit comparison
struct Time0Grid {
  double cell;
  bool torus;
  std::unordered_map<long, std::vector<int>> cells;

  Time0Grid(double eps, bool on_torus) : cell(eps), torus(on_torus) {
    // cells must tile the torus exactly so wrapped probes line up
    if (torus) cell = 1.0 / std::max(1.0, std::floor(1.0 / eps));
  }
  long key(double x, double y) const {
    long ix = static_cast<long>(std::floor(x / cell));
    long iy = static_cast<long>(std::floor(y / cell));
    if (torus) {
      long n = static_cast<long>(std::llround(1.0 / cell));
      if (n > 0) {
        ix = ((ix % n) + n) % n;
        iy = ((iy % n) + n) % n;
      }
    }
    return ix * 1000003L + iy;
  }
  void insert(double x, double y, int id) { cells[key(x, y)].push_back(id); }
  void gather(double x, double y, std::vector<int>& out) const {
    for (int ox = -1; ox <= 1; ++ox)
      for (int oy = -1; oy <= 1; ++oy) {
        auto it = cells.find(key(x + ox * cell, y + oy * cell));
        if (it != cells.end())
          out.insert(out.end(), it->second.begin(), it->second.end());
      }
  }
};

} // namespace

OrbitSample sample_bernoulli_horseshoe(const AffineHorseshoe& h, int count,
                                       int horizon, std::uint64_t seed) {
  OrbitSample s;
  s.law = "bernoulli-itinerary";
  s.horizon = horizon;
  s.seed = seed;
  s.points.reserve(static_cast<std::size_t>(count));
  std::mt19937_64 rng(seed);
  // fair-coin future symbols; the backward tail is pinned to 0, so the
  // expanding coordinate carries all the randomness and distinct
  // futures correspond to Bowen-separated orbits
  for (int i = 0; i < count; ++i) {
    Word core(static_cast<std::size_t>(horizon + 1));
    for (auto& c : core) c = static_cast<int>(rng() & 1);
    SymbolicPoint sym(Word{0}, core, Word{0});
    s.points.push_back(h.point_from_itinerary(sym));
  }
  return s;
}

OrbitSample sample_lebesgue_torus(int count, int horizon, std::uint64_t seed) {
  OrbitSample s;
  s.law = "lebesgue-torus";
  s.horizon = horizon;
  s.seed = seed;
  s.points.reserve(static_cast<std::size_t>(count));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    double x = u53(rng), y = u53(rng);
    s.points.push_back(RatPoint(x, y));
  }
  return s;
}

double bowen_distance(const System& sys, const RatPoint& x, const RatPoint& y,
                      int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  auto ox = orbit_positions(sys, x, n);
  auto oy = orbit_positions(sys, y, n);
  return orbit_dist(sys, ox, oy, n);
}

std::vector<int> max_separated(const System& sys, const OrbitSample& sample,
                               int n, double eps) {
  if (n < 1 || n > sample.horizon)
    throw std::invalid_argument("n outside the sample horizon");
  const auto orbs = sample_orbits(sys, sample, n);
  const bool torus = std::holds_alternative<TorusAutomorphism>(sys);
  Time0Grid grid(eps, torus);
  std::vector<int> chosen;
  std::vector<int> cand;
  for (int i = 0; i < static_cast<int>(orbs.size()); ++i) {
    cand.clear();
    grid.gather(orbs[i][0][0], orbs[i][0][1], cand);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    bool separated = true;
    for (int j : cand)
      if (!orbit_separated(sys, orbs[i], orbs[j], n, eps)) {
        separated = false;
        break;
      }
    if (separated) {
      chosen.push_back(i);
      grid.insert(orbs[i][0][0], orbs[i][0][1], i);
    }
  }
  return chosen;
}

BowenCoverReport cover_estimate(const System& sys, const OrbitSample& sample,
                                int n, double eps, double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must lie in (0,1)");
  if (n < 1 || n > sample.horizon)
    throw std::invalid_argument("n outside the sample horizon");
  const int N = static_cast<int>(sample.points.size());
  const auto orbs = sample_orbits(sys, sample, n);
  const bool torus = std::holds_alternative<TorusAutomorphism>(sys);

  // symmetric Bowen-ball membership lists (strict inequality)
  Time0Grid grid(eps, torus);
  for (int i = 0; i < N; ++i) grid.insert(orbs[i][0][0], orbs[i][0][1], i);
  std::vector<std::vector<int>> ball(N);
  std::vector<int> cand;
  for (int i = 0; i < N; ++i) {
    cand.clear();
    grid.gather(orbs[i][0][0], orbs[i][0][1], cand);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (int j : cand) {
      if (j <= i) continue;
      if (orbit_dist(sys, orbs[i], orbs[j], n) < eps) {
        ball[i].push_back(j);
        ball[j].push_back(i);
      }
    }
  }

  const double target = (1.0 - delta) * N;
  std::vector<char> covered(N, 0);
  long covered_count = 0;
  long centers = 0;
  // lazy greedy: priority by uncovered coverage, ties by sample order
  using Entry = std::pair<long, int>; // (count, -index)
  std::priority_queue<std::pair<Entry, int>> heap;
  auto coverage = [&](int i) {
    long c = covered[i] ? 0 : 1;
    for (int j : ball[i]) c += covered[j] ? 0 : 1;
    return c;
  };
  for (int i = 0; i < N; ++i)
    heap.push({{static_cast<long>(ball[i].size()) + 1, -i}, i});
  while (covered_count + 1e-9 < target && !heap.empty()) {
    auto [prio, i] = heap.top();
    heap.pop();
    long fresh = coverage(i);
    if (fresh != prio.first) {
      if (fresh > 0) heap.push({{fresh, -i}, i});
      continue;
    }
    if (fresh == 0) continue;
    ++centers;
    if (!covered[i]) {
      covered[i] = 1;
      ++covered_count;
    }
    for (int j : ball[i])
      if (!covered[j]) {
        covered[j] = 1;
        ++covered_count;
      }
  }

  BowenCoverReport rep;
  rep.n = n;
  rep.eps = eps;
  rep.delta = delta;
  rep.cover_size = centers;
  rep.separated_size = static_cast<long>(max_separated(sys, sample, n, eps).size());
  rep.log_cover_over_n =
      centers > 0 ? std::log(static_cast<double>(centers)) / n : 0.0;
  return rep;
}

KatokReport katok_entropy(const System& sys, const OrbitSample& sample,
                          const std::vector<int>& n_range, double eps,
                          double delta) {
  if (n_range.size() < 4)
    throw std::invalid_argument("n_range needs at least 4 values");
  KatokReport rep;
  rep.eps = eps;
  rep.delta = delta;
  rep.sample_law = sample.law;
  rep.seed = sample.seed;
  for (int n : n_range) rep.per_n.push_back(cover_estimate(sys, sample, n, eps, delta));

  bool all_one = true;
  for (const auto& r : rep.per_n)
    if (r.cover_size > 1) all_one = false;
  if (all_one) {
    rep.degenerate = true;
    rep.slope = 0.0;
    rep.slope_separated = 0.0;
    return rep;
  }
  auto fit = [&](bool use_separated) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int k = 0;
    for (const auto& r : rep.per_n) {
      long size = use_separated ? r.separated_size : r.cover_size;
      if (size <= 0) continue;
      double x = r.n, y = std::log(static_cast<double>(size));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++k;
    }
    if (k < 2) return 0.0;
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
  };
  rep.slope = fit(false);
  rep.slope_separated = fit(true);
  return rep;
}

} // namespace homcount
