#ifndef HOMCOUNT_HENON_HPP
#define HOMCOUNT_HENON_HPP

#include "homcount/point.hpp"

namespace homcount {

/// (x,y) -> (1 - a x^2 + y, b x).  Exploratory system: no hyperbolicity
/// certificate is claimed anywhere for it.
struct HenonMap {
  Rational a, b;

  HenonMap(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
    if (b == 0) throw std::invalid_argument("b must be nonzero (invertibility)");
  }

  /// Exact k-fold application (polynomial map on rationals).
  RatPoint apply(const RatPoint& p, long k) const {
    RatPoint c = p;
    for (long t = 0; t < (k >= 0 ? k : -k); ++t) {
      if (k >= 0) {
        Rational nx = 1 - a * c.x * c.x + c.y;
        Rational ny = b * c.x;
        c = {nx, ny};
      } else {
        Rational px = c.y / b;
        Rational py = c.x - 1 + a * px * px;
        c = {px, py};
      }
    }
    return c;
  }

  /// Double-precision step for curve growth.
  std::array<double, 2> apply_d(double x, double y, bool inverse) const {
    const double ad = a.get_d(), bd = b.get_d();
    if (!inverse) return {1.0 - ad * x * x + y, bd * x};
    double px = y / bd;
    return {px, x - 1.0 + ad * px * px};
  }
};

} // namespace homcount

#endif // HOMCOUNT_HENON_HPP
