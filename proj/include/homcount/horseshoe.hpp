#ifndef HOMCOUNT_HORSESHOE_HPP
#define HOMCOUNT_HORSESHOE_HPP

#include "homcount/point.hpp"
#include "homcount/symbolic.hpp"

namespace homcount {

/// Thrown when an orbit leaves the two horizontal strips (forward) or
/// the two vertical strips (backward).
class EscapeError : public std::runtime_error {
 public:
  EscapeError(long time, bool backward)
      : std::runtime_error(std::string("escaped after ") +
                           std::to_string(time) +
                           (backward ? " backward steps" : " steps")),
        time_(time), backward_(backward) {}
  long time() const { return time_; }
  bool backward() const { return backward_; }

 private:
  long time_;
  bool backward_;
};

/// Linear horseshoe on [0,1]^2: the horizontal strips
/// H0 = [0,1]x[0,kappa] and H1 = [0,1]x[1-kappa,1] map affinely and
/// orientation-preservingly onto the vertical strips V0 = [0,kappa]x[0,1]
/// and V1 = [1-kappa,1]x[0,1].  The invariant set is conjugate to the
/// full 2-shift; (0,0) is the fixed point with itinerary 0^inf.
class AffineHorseshoe {
 public:
  AffineHorseshoe(Rational kappa, Rational mu);

  static AffineHorseshoe standard() {
    return AffineHorseshoe(Rational(1, 5), Rational(5));
  }

  const Rational& kappa() const { return kappa_; }
  const Rational& mu() const { return mu_; }

  /// Strip index (0/1) of a point, nullopt if in the middle gap or
  /// outside the square.
  std::optional<int> strip(const RatPoint& p) const;
  std::optional<int> vstrip(const RatPoint& p) const;

  /// One forward (k=+1 per step) or backward application, exact.
  /// Throws EscapeError when the orbit leaves the domain of the branch
  /// maps, reporting the first escape time.
  RatPoint apply(const RatPoint& p, long k = 1) const;

  RatPoint fixed_point0() const { return {Rational(0), Rational(0)}; }
  RatPoint fixed_point1() const { return {Rational(1), Rational(1)}; }

  struct Itinerary {
    Word past;   // strips of f^k(x) for k = -n_bwd..-1, in that order
    Word future; // strips of f^k(x) for k = 0..n_fwd-1
  };

  /// Strip symbols along the orbit window.  Throws EscapeError.
  Itinerary itinerary(const RatPoint& p, int n_fwd, int n_bwd) const;

  /// Unique point with the given bi-infinite itinerary; `offset` gives
  /// the point of sigma^offset(s).  Exact: eventually periodic tails
  /// sum as geometric series.
  RatPoint point_from_itinerary(const SymbolicPoint& s, long offset = 0) const;

 private:
  Rational kappa_, mu_;
};

} // namespace homcount

#endif // HOMCOUNT_HORSESHOE_HPP
