#ifndef HOMCOUNT_SYSTEM_HPP
#define HOMCOUNT_SYSTEM_HPP

#include <array>
#include <variant>
#include <vector>

#include "homcount/henon.hpp"
#include "homcount/horseshoe.hpp"
#include "homcount/toral.hpp"

namespace homcount {

using System = std::variant<TorusAutomorphism, AffineHorseshoe, HenonMap>;

/// k-fold application; exact on rational points for every model system.
RatPoint apply(const System& sys, const RatPoint& p, long k = 1);

/// System metric: torus metric for automorphisms, Euclidean otherwise.
double dist(const System& sys, const RatPoint& a, const RatPoint& b);
double dist_d(const System& sys, double ax, double ay, double bx, double by);

std::string system_name(const System& sys);

/// True for the systems whose hyperbolicity the artifact certifies.
bool certified_hyperbolic(const System& sys);

/// Forward orbit p, f(p), ..., f^{n-1}(p) as double pairs.  Exact
/// iteration underneath for toral/horseshoe; plain double steps for
/// the exploratory Henon map.
std::vector<std::array<double, 2>> orbit_positions(const System& sys,
                                                   const RatPoint& p, int n);

struct ConeReport {
  bool unstable_ok = false;
  bool stable_ok = false;
  double min_expansion_u = 0.0; // over grid points and cone rays
  double min_expansion_s = 0.0; // for the inverse on the stable cone
  double max_image_angle_u = 0.0;
  double max_image_angle_s = 0.0;
  bool ok() const { return unstable_ok && stable_ok; }
};

/// Checks that the derivative maps the unstable cone of the given
/// aperture (around the system's reference unstable direction)
/// strictly inside itself with uniform expansion > 1 at every sample
/// point, and the inverse derivative likewise for the stable cone.
ConeReport cone_condition_check(const System& sys,
                                const std::vector<RatPoint>& sample_grid,
                                double aperture);

/// Reference expanding/contracting directions used by the cone check.
std::array<double, 2> unstable_direction(const System& sys);
std::array<double, 2> stable_direction(const System& sys);

} // namespace homcount

#endif // HOMCOUNT_SYSTEM_HPP
