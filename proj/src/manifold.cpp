#include "homcount/manifold.hpp"

#include <algorithm>
#include <cmath>

namespace homcount {

namespace {

constexpr double kTorusSafeRadius = 0.25;
constexpr int kOrderCap = 300;

int period_of(const System& sys, const RatPoint& p, int cap = 128) {
  RatPoint cur = p;
  for (int k = 1; k <= cap; ++k) {
    cur = apply(sys, cur, 1);
    if (cur == p) return k;
  }
  throw std::invalid_argument("point is not periodic within the period cap");
}

double safe_eps_bound(const System& sys) {
  if (std::holds_alternative<TorusAutomorphism>(sys)) return kTorusSafeRadius;
  if (auto* h = std::get_if<AffineHorseshoe>(&sys))
    return 1.0 - h->kappa().get_d();
  throw std::invalid_argument(
      "local manifolds require a certified hyperbolic system");
}

void check_eps(const System& sys, double eps) {
  double bound = safe_eps_bound(sys);
  if (!(eps > 0) || eps > bound)
    throw std::invalid_argument("eps " + std::to_string(eps) +
                                " exceeds the safe radius " +
                                std::to_string(bound));
}

// clip [x + t*d : t in [0,1]] to a coordinate band [lo, hi]
struct Clip {
  double t0, t1;
  bool ok;
};

Clip clip_band(double a, double d, double lo, double hi) {
  if (std::fabs(d) < 1e-300) {
    bool inside = a >= lo && a <= hi;
    return {0.0, 1.0, inside};
  }
  double t0 = (lo - a) / d, t1 = (hi - a) / d;
  if (t0 > t1) std::swap(t0, t1);
  t0 = std::max(t0, 0.0);
  t1 = std::min(t1, 1.0);
  return {t0, t1, t0 < t1};
}

} // namespace

TorusPolyline local_manifold(const System& sys, const RatPoint& p, double eps,
                             Side side, const ManifoldParams& par) {
  check_eps(sys, eps);
  (void)period_of(sys, p);
  if (auto* t = std::get_if<TorusAutomorphism>(&sys)) {
    auto dir = side == Side::unstable ? t->unstable_dir() : t->stable_dir();
    const double px = p.xd(), py = p.yd();
    return TorusPolyline::segment(true, par.max_gap, px - eps * dir[0],
                                  py - eps * dir[1], px + eps * dir[0],
                                  py + eps * dir[1]);
  }
  const double px = p.xd(), py = p.yd();
  TorusPolyline c(false, par.max_gap);
  if (side == Side::unstable) {
    double lo = std::max(0.0, py - eps), hi = std::min(1.0, py + eps);
    c.append(px, lo, 0.0, hi - lo, true);
  } else {
    double lo = std::max(0.0, px - eps), hi = std::min(1.0, px + eps);
    c.append(lo, py, hi - lo, 0.0, true);
  }
  return c;
}

TorusPolyline fundamental_domain(const System& sys, const RatPoint& p,
                                 double eps, Side side,
                                 const ManifoldParams& par) {
  check_eps(sys, eps);
  const int m = period_of(sys, p);
  // coordinate scale factor of the return map on the chosen side
  double step;
  if (auto* t = std::get_if<TorusAutomorphism>(&sys)) {
    step = std::pow(std::fabs(t->lambda_u()), m);
  } else {
    const auto& h = std::get<AffineHorseshoe>(sys);
    step = std::pow(side == Side::unstable ? h.mu().get_d()
                                           : 1.0 / h.kappa().get_d(),
                    m);
  }
  const double inner = eps / step;

  const double px = p.xd(), py = p.yd();
  TorusPolyline c(std::holds_alternative<TorusAutomorphism>(sys), par.max_gap);
  if (auto* t = std::get_if<TorusAutomorphism>(&sys)) {
    auto dir = side == Side::unstable ? t->unstable_dir() : t->stable_dir();
    c.append(px + inner * dir[0], py + inner * dir[1], (eps - inner) * dir[0],
             (eps - inner) * dir[1], true);
    c.append(px - eps * dir[0], py - eps * dir[1], (eps - inner) * dir[0],
             (eps - inner) * dir[1], true);
    return c;
  }
  if (side == Side::unstable) {
    double hi = std::min(1.0, py + eps), lo_in = py + inner;
    if (lo_in < hi) c.append(px, lo_in, 0.0, hi - lo_in, true);
    double lo = std::max(0.0, py - eps), hi_in = py - inner;
    if (lo < hi_in) c.append(px, lo, 0.0, hi_in - lo, true);
  } else {
    double hi = std::min(1.0, px + eps), lo_in = px + inner;
    if (lo_in < hi) c.append(lo_in, py, hi - lo_in, 0.0, true);
    double lo = std::max(0.0, px - eps), hi_in = px - inner;
    if (lo < hi_in) c.append(lo, py, hi_in - lo, 0.0, true);
  }
  return c;
}

namespace {

TorusPolyline grow_once_toral(const TorusAutomorphism& t,
                              const TorusPolyline& cur, bool backward) {
  double a, b, c, d;
  if (!backward) {
    a = static_cast<double>(t.entry(0, 0));
    b = static_cast<double>(t.entry(0, 1));
    c = static_cast<double>(t.entry(1, 0));
    d = static_cast<double>(t.entry(1, 1));
  } else {
    double s = static_cast<double>(t.det());
    a = s * t.entry(1, 1);
    b = -s * t.entry(0, 1);
    c = -s * t.entry(1, 0);
    d = s * t.entry(0, 0);
  }
  TorusPolyline out(true, cur.max_gap());
  for (const auto& pc : cur.pieces()) {
    double nx = a * pc.x + b * pc.y, ny = c * pc.x + d * pc.y;
    double ndx = a * pc.dx + b * pc.dy, ndy = c * pc.dx + d * pc.dy;
    out.append(nx, ny, ndx, ndy);
  }
  return out;
}

TorusPolyline grow_once_horseshoe(const AffineHorseshoe& h,
                                  const TorusPolyline& cur, bool backward) {
  const double k = h.kappa().get_d(), mu = h.mu().get_d();
  const double cband = 1.0 - k;
  TorusPolyline out(false, cur.max_gap());
  for (const auto& pc : cur.pieces()) {
    for (int strip = 0; strip < 2; ++strip) {
      Clip cl = backward
                    ? clip_band(pc.x, pc.dx, strip == 0 ? 0.0 : cband,
                                strip == 0 ? k : 1.0)
                    : clip_band(pc.y, pc.dy, strip == 0 ? 0.0 : cband,
                                strip == 0 ? k : 1.0);
      if (!cl.ok) continue;
      double x0 = pc.x + cl.t0 * pc.dx, y0 = pc.y + cl.t0 * pc.dy;
      double dx = (cl.t1 - cl.t0) * pc.dx, dy = (cl.t1 - cl.t0) * pc.dy;
      if (!backward) {
        double off = strip == 0 ? 0.0 : cband;
        out.append(off + k * x0, mu * (y0 - off), k * dx, mu * dy);
      } else {
        double off = strip == 0 ? 0.0 : cband;
        out.append((x0 - off) / k, off + y0 / mu, dx / k, dy / mu);
      }
    }
  }
  return out;
}

void henon_refine(const HenonMap& h, bool backward, double x0, double y0,
                  double x1, double y1, int depth, double max_gap,
                  TorusPolyline& out) {
  auto q0 = h.apply_d(x0, y0, backward);
  auto q1 = h.apply_d(x1, y1, backward);
  double gx = q1[0] - q0[0], gy = q1[1] - q0[1];
  if (std::hypot(gx, gy) <= max_gap || depth >= 20) {
    out.append(q0[0], q0[1], gx, gy);
    return;
  }
  double mx = 0.5 * (x0 + x1), my = 0.5 * (y0 + y1);
  henon_refine(h, backward, x0, y0, mx, my, depth + 1, max_gap, out);
  henon_refine(h, backward, mx, my, x1, y1, depth + 1, max_gap, out);
}

TorusPolyline grow_once_henon(const HenonMap& h, const TorusPolyline& cur,
                              bool backward) {
  TorusPolyline out(false, cur.max_gap());
  for (const auto& pc : cur.pieces())
    henon_refine(h, backward, pc.x, pc.y, pc.x + pc.dx, pc.y + pc.dy, 0,
                 cur.max_gap(), out);
  return out;
}

} // namespace

GrowResult grow(const System& sys, const TorusPolyline& curve, int iterations,
                std::size_t budget) {
  GrowResult res{curve, 0, false};
  const bool backward = iterations < 0;
  const int steps = backward ? -iterations : iterations;
  for (int it = 0; it < steps; ++it) {
    TorusPolyline next =
        std::holds_alternative<TorusAutomorphism>(sys)
            ? grow_once_toral(std::get<TorusAutomorphism>(sys), res.curve,
                              backward)
            : std::holds_alternative<AffineHorseshoe>(sys)
                  ? grow_once_horseshoe(std::get<AffineHorseshoe>(sys),
                                        res.curve, backward)
                  : grow_once_henon(std::get<HenonMap>(sys), res.curve,
                                    backward);
    if (next.vertex_count() > budget) {
      res.budget_exceeded = true;
      return res;
    }
    res.curve = std::move(next);
    res.iterations_done = it + 1;
  }
  return res;
}

namespace {

struct Frame {
  // columns (vu, vs); inv solves d = alpha*vu + beta*vs
  double ux, uy, sx, sy, inv_det;
  std::array<double, 2> coords(double dx, double dy) const {
    double alpha = (dx * sy - dy * sx) * inv_det;
    double beta = (ux * dy - uy * dx) * inv_det;
    return {alpha, beta};
  }
};

Frame frame_of(const TorusAutomorphism& t) {
  auto u = t.unstable_dir(), s = t.stable_dir();
  double det = u[0] * s[1] - u[1] * s[0];
  return {u[0], u[1], s[0], s[1], 1.0 / det};
}

bool member_stable_toral(const TorusAutomorphism& t, const Frame& fr,
                         const RatPoint& x, const RatPoint& q, double eps,
                         double ctol) {
  double dx = x.xd() - q.xd(), dy = x.yd() - q.yd();
  dx -= std::round(dx);
  dy -= std::round(dy);
  auto ab = fr.coords(dx, dy);
  (void)t;
  return std::fabs(ab[0]) <= ctol && std::fabs(ab[1]) <= eps;
}

bool member_unstable_toral(const TorusAutomorphism& t, const Frame& fr,
                           const RatPoint& x, const RatPoint& q, double eps,
                           double ctol) {
  double dx = x.xd() - q.xd(), dy = x.yd() - q.yd();
  dx -= std::round(dx);
  dy -= std::round(dy);
  auto ab = fr.coords(dx, dy);
  (void)t;
  return std::fabs(ab[1]) <= ctol && std::fabs(ab[0]) <= eps;
}

} // namespace

Order order_smooth(const System& sys, const RatPoint& p, const RatPoint& x,
                   double eps) {
  check_eps(sys, eps);
  if (x == p)
    throw std::invalid_argument(
        "a homoclinic point excludes the periodic point itself");
  Order out;
  if (auto* t = std::get_if<TorusAutomorphism>(&sys)) {
    Frame fr = frame_of(*t);
    const double ctol = 1e-9;
    bool found = false;
    RatPoint xn = x, qn = p;
    for (int n = 0; n <= kOrderCap; ++n) {
      if (member_stable_toral(*t, fr, xn, qn, eps, ctol)) {
        out.theta_s = n;
        found = true;
        break;
      }
      xn = apply(sys, xn, 1);
      qn = apply(sys, qn, 1);
    }
    if (!found)
      throw std::invalid_argument("x does not reach the local stable manifold");
    found = false;
    xn = x;
    qn = p;
    for (int n = 0; n <= kOrderCap; ++n) {
      if (member_unstable_toral(*t, fr, xn, qn, eps, ctol)) {
        out.theta_u = n;
        found = true;
        break;
      }
      xn = apply(sys, xn, -1);
      qn = apply(sys, qn, -1);
    }
    if (!found)
      throw std::invalid_argument(
          "x does not reach the local unstable manifold");
    return out;
  }
  if (std::holds_alternative<AffineHorseshoe>(sys)) {
    const Rational epsq(eps);
    bool found = false;
    RatPoint xn = x, qn = p;
    for (int n = 0; n <= kOrderCap; ++n) {
      // membership in W^s_eps(qn): identical y (same future itinerary,
      // so identical expanding coordinate) and x within eps
      if (xn.y == qn.y && abs(xn.x - qn.x) <= epsq) {
        out.theta_s = n;
        found = true;
        break;
      }
      xn = apply(sys, xn, 1);
      qn = apply(sys, qn, 1);
    }
    if (!found)
      throw std::invalid_argument("x does not reach the local stable manifold");
    found = false;
    xn = x;
    qn = p;
    for (int n = 0; n <= kOrderCap; ++n) {
      if (xn.x == qn.x && abs(xn.y - qn.y) <= epsq) {
        out.theta_u = n;
        found = true;
        break;
      }
      xn = apply(sys, xn, -1);
      qn = apply(sys, qn, -1);
    }
    if (!found)
      throw std::invalid_argument(
          "x does not reach the local unstable manifold");
    return out;
  }
  throw std::invalid_argument("orders require a certified hyperbolic system");
}

namespace {

// Largest n' <= done with n' = n_target (mod m), for re-anchoring a
// truncated backward growth on the right orbit point.
int truncate_to_phase(int done, int n_target, int m) {
  int n = done;
  while (n > 0 && ((n_target - n) % m + m) % m != 0) --n;
  return n;
}

long long classify_theta(double coord, double eps, double lambda) {
  double a = std::fabs(coord);
  if (a <= eps) return 0;
  double raw = std::log(a / eps) / std::log(lambda);
  long long n = static_cast<long long>(std::ceil(raw - 1e-12));
  if (n < 1) n = 1;
  while (eps * std::pow(lambda, static_cast<double>(n)) < a) ++n;
  while (n > 1 && eps * std::pow(lambda, static_cast<double>(n - 1)) >= a) --n;
  return n;
}

// Future strip symbols of a stable-manifold point of a horseshoe fixed
// point, by greedy expansion.  Heights on the grown curve terminate
// exactly at the base, so a depth-scaled threshold separates the
// terminal tail from the float noise accumulated by the expansion.
Word extract_future(const AffineHorseshoe& h, double y, double base,
                    int depth_cap) {
  const double k = h.kappa().get_d(), mu = h.mu().get_d();
  Word w;
  double cur = y;
  double noise = 1e-10; // grows by mu per expansion step
  for (int j = 0; j < depth_cap; ++j) {
    if (std::fabs(cur - base) <= noise) break;
    if (cur <= k + noise) {
      w.push_back(0);
      cur = mu * cur;
    } else if (cur >= 1.0 - k - noise) {
      w.push_back(1);
      cur = mu * (cur - (1.0 - k));
    } else {
      throw std::runtime_error("intersection height leaves the strips");
    }
    noise *= mu;
  }
  return w;
}

} // namespace

SmoothCensus census_smooth(const System& sys, const RatPoint& p, double eps,
                           int n_max, std::size_t budget,
                           const ManifoldParams& par) {
  check_eps(sys, eps);
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  const int m = period_of(sys, p);

  SmoothCensus out;
  out.table.system_id = system_name(sys);
  out.table.parameters =
      "eps=" + std::to_string(eps) + ";n_max=" + std::to_string(n_max) +
      ";budget=" + std::to_string(budget) +
      ";max_gap=" + std::to_string(par.max_gap) +
      ";dedup_tol=" + std::to_string(par.dedup_tol) +
      ";angle_min=" + std::to_string(par.angle_min);

  TorusPolyline local_u = local_manifold(sys, p, eps, Side::unstable, par);

  // backward-grow the local stable manifold seeded on the forward orbit
  // point, so the grown curve is anchored at p itself
  auto grow_back = [&](int n) {
    RatPoint target = apply(sys, p, n);
    TorusPolyline seed = local_manifold(sys, target, eps, Side::stable, par);
    return grow(sys, seed, -n, budget);
  };
  GrowResult gr = grow_back(n_max);
  int n_eff = n_max;
  if (gr.budget_exceeded) {
    n_eff = truncate_to_phase(gr.iterations_done, n_max, m);
    gr = grow_back(n_eff);
    out.table.truncated = true;
  }
  out.table.last_complete = n_eff;

  IntersectionSet isec =
      intersections(local_u, gr.curve, par.angle_min, par.dedup_tol);
  out.angle_min_observed = isec.min_angle;
  out.dedup_merges = isec.dedup_merges;

  for (int n = 0; n <= n_eff; ++n) out.table.entries[n] = 0;

  if (auto* t = std::get_if<TorusAutomorphism>(&sys)) {
    const double lam = std::fabs(t->lambda_u());
    const double R = eps * std::pow(lam, static_cast<double>(n_eff));
    // orientation of the grown curve flips when lambda_s^{-n} < 0
    const double sgn = (t->lambda_s() < 0 && n_eff % 2 != 0) ? -1.0 : 1.0;
    auto vu = t->unstable_dir();
    auto vs = t->stable_dir();
    const double det = vu[0] * (-vs[1]) - vu[1] * (-vs[0]);
    for (const auto& rec : isec.accepted) {
      const double t_raw = rec.arc_a - eps;
      const double s_raw = sgn * (rec.arc_b - R);
      // lattice snap: t*vu - s*vs must be integral for a true crossing
      const double wx = t_raw * vu[0] - s_raw * vs[0];
      const double wy = t_raw * vu[1] - s_raw * vs[1];
      const double jx = std::round(wx), jy = std::round(wy);
      if (jx == 0.0 && jy == 0.0) continue; // the fixed/periodic point itself
      // solve [vu, -vs] (t,s)^T = (jx,jy) exactly in closed form
      const double ts = (jx * (-vs[1]) - jy * (-vs[0])) / det;
      const double ss = (vu[0] * jy - vu[1] * jx) / det;
      long long n = classify_theta(ss, eps, lam);
      if (n > n_eff) continue;
      SmoothRecord r;
      r.x = rec.x;
      r.y = rec.y;
      r.theta_s = n;
      r.theta_u = 0;
      r.angle = rec.angle;
      r.arc_u = ts;
      r.arc_s = ss;
      out.records.push_back(r);
      out.table.entries[n] += 1;
    }
  } else if (auto* h = std::get_if<AffineHorseshoe>(&sys)) {
    if (m != 1)
      throw std::invalid_argument(
          "horseshoe census supports the two fixed points");
    const double base = p.yd(); // 0 or 1
    const Word tail{base == 0.0 ? 0 : 1};
    for (const auto& rec : isec.accepted) {
      Word fut = extract_future(*h, rec.y, base, n_eff + 8);
      if (fut.empty()) continue; // the fixed point itself
      SymbolicPoint sp(tail, fut, tail);
      RatPoint exact = h->point_from_itinerary(sp);
      if (exact == p) continue;
      Order o = order_smooth(sys, p, exact, eps);
      if (o.theta_u != 0 || o.theta_s > n_eff) continue;
      SmoothRecord r;
      r.x = rec.x;
      r.y = rec.y;
      r.theta_s = o.theta_s;
      r.theta_u = 0;
      r.angle = rec.angle;
      r.arc_u = rec.arc_a;
      r.arc_s = rec.arc_b;
      r.itinerary = fut;
      out.records.push_back(r);
      out.table.entries[o.theta_s] += 1;
    }
  }
  std::sort(out.records.begin(), out.records.end(),
            [](const SmoothRecord& a, const SmoothRecord& b) {
              if (a.theta_s != b.theta_s) return a.theta_s < b.theta_s;
              if (a.x != b.x) return a.x < b.x;
              return a.y < b.y;
            });
  return out;
}

Related homoclinically_related(const System& sys, const RatPoint& p,
                               const RatPoint& q, int max_iterations,
                               std::size_t budget, double eps,
                               const ManifoldParams& par) {
  if (!certified_hyperbolic(sys)) return Related::not_found;
  const int mp = period_of(sys, p);
  const int mq = period_of(sys, q);

  auto crosses = [&](const RatPoint& a, int ma, const RatPoint& b) {
    TorusPolyline u = local_manifold(sys, a, eps, Side::unstable, par);
    TorusPolyline s = local_manifold(sys, b, eps, Side::stable, par);
    const double skip = std::max(par.dedup_tol * 10, 1e-7);
    for (int it = 0; it <= max_iterations; ++it) {
      IntersectionSet hits = intersections(u, s, par.angle_min, par.dedup_tol);
      for (const auto& r : hits.accepted) {
        // for a == b the local manifolds always cross at the periodic
        // point itself; only crossings away from it witness anything
        if (a == b && dist_d(sys, r.x, r.y, a.xd(), a.yd()) <= skip) continue;
        return true;
      }
      if (it == max_iterations) break;
      GrowResult g = grow(sys, u, ma, budget); // one return-map step
      if (g.budget_exceeded || g.iterations_done < ma) return false;
      u = std::move(g.curve);
    }
    return false;
  };
  // p == q asks for a homoclinic point of p: exclude crossings at p
  if (crosses(p, mp, q) && crosses(q, mq, p)) return Related::related;
  return Related::not_found;
}

std::vector<double> tangent_convergence(const System& sys,
                                        const TorusPolyline& seed,
                                        int iterations) {
  double lu, ls;          // expansion/contraction magnitudes per step
  double ux, uy, sx, sy;  // frame
  if (auto* t = std::get_if<TorusAutomorphism>(&sys)) {
    lu = std::fabs(t->lambda_u());
    ls = std::fabs(t->lambda_s());
    auto u = t->unstable_dir(), s = t->stable_dir();
    ux = u[0];
    uy = u[1];
    sx = s[0];
    sy = s[1];
  } else if (auto* h = std::get_if<AffineHorseshoe>(&sys)) {
    lu = h->mu().get_d();
    ls = h->kappa().get_d();
    ux = 0;
    uy = 1;
    sx = 1;
    sy = 0;
  } else {
    throw std::invalid_argument(
        "tangent transport requires a certified hyperbolic system");
  }
  const double det = ux * sy - uy * sx;
  const double r = ls / lu;
  // eigenframe components of every tangent; the angle after k steps is
  // atan(|beta| r^k / |alpha|), exact for these systems
  std::vector<std::array<double, 2>> comps;
  comps.reserve(seed.pieces().size());
  for (const auto& pc : seed.pieces()) {
    double alpha = (pc.dx * sy - pc.dy * sx) / det;
    double beta = (ux * pc.dy - uy * pc.dx) / det;
    comps.push_back({alpha, beta});
  }
  if (comps.empty()) throw std::invalid_argument("empty seed curve");
  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(iterations));
  for (int k = 1; k <= iterations; ++k) {
    double worst = 0.0;
    const double rk = std::pow(r, static_cast<double>(k));
    for (const auto& ab : comps)
      worst = std::max(worst,
                       std::atan2(std::fabs(ab[1]) * rk, std::fabs(ab[0])));
    angles.push_back(worst);
  }
  return angles;
}

} // namespace homcount
