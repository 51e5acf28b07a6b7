#ifndef HOMCOUNT_MANIFOLD_HPP
#define HOMCOUNT_MANIFOLD_HPP

#include "homcount/census.hpp"
#include "homcount/polyline.hpp"
#include "homcount/symbolic.hpp"
#include "homcount/system.hpp"

namespace homcount {

enum class Side { stable, unstable };

struct ManifoldParams {
  double max_gap = 0.125;
  double angle_min = 1e-3;   // radians
  double dedup_tol = 1e-9;   // torus distance
};

/// Segment of W^{s/u}(p) of coordinate radius eps about the periodic
/// point p, exact for the linear/affine model systems.  Refuses eps
/// beyond the safe radius (0.25 on the torus, 1-kappa for the
/// horseshoe), reporting the bound.
TorusPolyline local_manifold(const System& sys, const RatPoint& p, double eps,
                             Side side, const ManifoldParams& par = {});

/// The half-open annular pieces W_eps \ g W_eps (stable) resp.
/// W_eps \ g^{-1} W_eps (unstable), g the return map of p.
TorusPolyline fundamental_domain(const System& sys, const RatPoint& p,
                                 double eps, Side side,
                                 const ManifoldParams& par = {});

struct GrowResult {
  TorusPolyline curve;
  int iterations_done = 0;
  bool budget_exceeded = false;
};

/// Image of the curve under the |iterations|-fold map (negative counts
/// apply the inverse), with adaptive refinement preserving max_gap and
/// the vertex budget.  On budget exhaustion the last completed iterate
/// is returned, flagged.
GrowResult grow(const System& sys, const TorusPolyline& curve, int iterations,
                std::size_t budget);

/// First forward/backward entry times of x into the eps-local
/// stable/unstable sets of p's orbit, decided in exact arithmetic.
/// Throws std::invalid_argument when x does not reach both local
/// manifolds within the iteration cap.
Order order_smooth(const System& sys, const RatPoint& p, const RatPoint& x,
                   double eps);

struct SmoothRecord {
  double x, y;
  long long theta_s = 0, theta_u = 0;
  double angle = 0.0;
  double arc_s = 0.0, arc_u = 0.0;
  Word itinerary; // horseshoe only: future strip symbols of the record
};

struct SmoothCensus {
  CensusTable table;
  std::vector<SmoothRecord> records;
  double angle_min_observed = 0.0;
  long dedup_merges = 0;
};

/// Census of homoclinic points of p with theta_u = 0 and theta_s = n
/// for n <= n_max: the local unstable manifold intersected with the
/// backward-grown stable manifold.  Deterministic given parameters.
SmoothCensus census_smooth(const System& sys, const RatPoint& p, double eps,
                           int n_max, std::size_t budget,
                           const ManifoldParams& par = {});

enum class Related { related, not_found };

/// `related` iff transverse intersections W^u(p) ^ W^s(q) and
/// W^u(q) ^ W^s(p) are both found within the budget; `not_found` is
/// inconclusive, never an assertion of non-relation.
Related homoclinically_related(const System& sys, const RatPoint& p,
                               const RatPoint& q, int max_iterations,
                               std::size_t budget, double eps = 0.1,
                               const ManifoldParams& par = {});

/// Max angle between the advected curve's tangents and the unstable
/// direction after each iterate.  Exact eigenframe transport for the
/// linear systems; the Henon map is not supported here.
std::vector<double> tangent_convergence(const System& sys,
                                        const TorusPolyline& seed,
                                        int iterations);

} // namespace homcount

#endif // HOMCOUNT_MANIFOLD_HPP
