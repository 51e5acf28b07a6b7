#ifndef HOMCOUNT_POINT_HPP
#define HOMCOUNT_POINT_HPP

#include <cmath>
#include <stdexcept>

#include "homcount/bigint.hpp"

namespace homcount {

/// Planar point with exact rational coordinates.  Doubles convert in
/// exactly (they are dyadic rationals), so orbit arithmetic on the
/// model systems is free of drift.
struct RatPoint {
  Rational x, y;

  RatPoint() : x(0), y(0) {}
  RatPoint(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {
    // mpq_class(num, den) does not canonicalize on its own
    x.canonicalize();
    y.canonicalize();
  }
  RatPoint(double px, double py) : x(px), y(py) {}

  double xd() const { return x.get_d(); }
  double yd() const { return y.get_d(); }

  bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
};

/// Fractional part in [0,1).
inline Rational rat_mod1(const Rational& q) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return q - Rational(fl);
}

inline RatPoint wrap_torus(const RatPoint& p) {
  return {rat_mod1(p.x), rat_mod1(p.y)};
}

/// Euclidean distance on the 2-torus: minimum over the 9 adjacent
/// lattice translates.
inline double torus_dist(double ax, double ay, double bx, double by) {
  double dx = ax - bx, dy = ay - by;
  dx -= std::round(dx);
  dy -= std::round(dy);
  return std::sqrt(dx * dx + dy * dy);
}

inline double torus_dist(const RatPoint& a, const RatPoint& b) {
  return torus_dist(a.xd(), a.yd(), b.xd(), b.yd());
}

inline double plane_dist(const RatPoint& a, const RatPoint& b) {
  double dx = a.xd() - b.xd(), dy = a.yd() - b.yd();
  return std::sqrt(dx * dx + dy * dy);
}

} // namespace homcount

#endif // HOMCOUNT_POINT_HPP
