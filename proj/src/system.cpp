#include "homcount/system.hpp"

#include <cmath>

namespace homcount {

RatPoint apply(const System& sys, const RatPoint& p, long k) {
  return std::visit([&](const auto& s) { return s.apply(p, k); }, sys);
}

double dist(const System& sys, const RatPoint& a, const RatPoint& b) {
  if (std::holds_alternative<TorusAutomorphism>(sys)) return torus_dist(a, b);
  return plane_dist(a, b);
}

double dist_d(const System& sys, double ax, double ay, double bx, double by) {
  if (std::holds_alternative<TorusAutomorphism>(sys))
    return torus_dist(ax, ay, bx, by);
  double dx = ax - bx, dy = ay - by;
  return std::sqrt(dx * dx + dy * dy);
}

std::string system_name(const System& sys) {
  if (auto* t = std::get_if<TorusAutomorphism>(&sys)) {
    return "toral[" + std::to_string(t->entry(0, 0)) + "," +
           std::to_string(t->entry(0, 1)) + ";" + std::to_string(t->entry(1, 0)) +
           "," + std::to_string(t->entry(1, 1)) + "]";
  }
  if (auto* h = std::get_if<AffineHorseshoe>(&sys)) {
    return "horseshoe[kappa=" + h->kappa().get_str() +
           ",mu=" + h->mu().get_str() + "]";
  }
  const auto& hen = std::get<HenonMap>(sys);
  return "henon[a=" + hen.a.get_str() + ",b=" + hen.b.get_str() +
         "] (exploratory)";
}

bool certified_hyperbolic(const System& sys) {
  return !std::holds_alternative<HenonMap>(sys);
}

std::vector<std::array<double, 2>> orbit_positions(const System& sys,
                                                   const RatPoint& p, int n) {
  std::vector<std::array<double, 2>> out;
  out.reserve(static_cast<std::size_t>(n));
  if (auto* hen = std::get_if<HenonMap>(&sys)) {
    double x = p.xd(), y = p.yd();
    for (int t = 0; t < n; ++t) {
      out.push_back({x, y});
      auto nx = hen->apply_d(x, y, false);
      x = nx[0];
      y = nx[1];
    }
    return out;
  }
  RatPoint cur = p;
  for (int t = 0; t < n; ++t) {
    out.push_back({cur.xd(), cur.yd()});
    if (t + 1 < n) cur = apply(sys, cur, 1);
  }
  return out;
}

std::array<double, 2> unstable_direction(const System& sys) {
  if (auto* t = std::get_if<TorusAutomorphism>(&sys)) return t->unstable_dir();
  if (std::holds_alternative<AffineHorseshoe>(sys)) return {0.0, 1.0};
  return {1.0, 0.0};
}

std::array<double, 2> stable_direction(const System& sys) {
  if (auto* t = std::get_if<TorusAutomorphism>(&sys)) return t->stable_dir();
  if (std::holds_alternative<AffineHorseshoe>(sys)) return {1.0, 0.0};
  return {0.0, 1.0};
}

namespace {

using Mat = std::array<std::array<double, 2>, 2>;

Mat jacobian(const System& sys, const RatPoint& p, bool inverse) {
  if (auto* t = std::get_if<TorusAutomorphism>(&sys)) {
    double a = static_cast<double>(t->entry(0, 0));
    double b = static_cast<double>(t->entry(0, 1));
    double c = static_cast<double>(t->entry(1, 0));
    double d = static_cast<double>(t->entry(1, 1));
    if (!inverse) return {{{a, b}, {c, d}}};
    double s = static_cast<double>(t->det());
    return {{{s * d, -s * b}, {-s * c, s * a}}};
  }
  if (auto* h = std::get_if<AffineHorseshoe>(&sys)) {
    double k = h->kappa().get_d(), mu = h->mu().get_d();
    if (!inverse) return {{{k, 0.0}, {0.0, mu}}};
    return {{{1.0 / k, 0.0}, {0.0, 1.0 / mu}}};
  }
  const auto& hen = std::get<HenonMap>(sys);
  double a = hen.a.get_d(), b = hen.b.get_d();
  double x = p.xd(), y = p.yd();
  if (!inverse) return {{{-2.0 * a * x, 1.0}, {b, 0.0}}};
  // inverse (X,Y) -> (Y/b, X - 1 + a (Y/b)^2) at the sample point
  return {{{0.0, 1.0 / b}, {1.0, 2.0 * a * y / (b * b)}}};
}

std::array<double, 2> rotate(const std::array<double, 2>& v, double t) {
  double c = std::cos(t), s = std::sin(t);
  return {c * v[0] - s * v[1], s * v[0] + c * v[1]};
}

double line_angle(const std::array<double, 2>& w,
                  const std::array<double, 2>& axis) {
  double nw = std::hypot(w[0], w[1]);
  double na = std::hypot(axis[0], axis[1]);
  double c = std::fabs(w[0] * axis[0] + w[1] * axis[1]) / (nw * na);
  if (c > 1.0) c = 1.0;
  return std::acos(c);
}

} // namespace

ConeReport cone_condition_check(const System& sys,
                                const std::vector<RatPoint>& sample_grid,
                                double aperture) {
  if (aperture <= 0 || aperture >= M_PI / 2)
    throw std::invalid_argument("aperture must lie in (0, pi/2)");
  ConeReport rep;
  rep.unstable_ok = rep.stable_ok = true;
  rep.min_expansion_u = rep.min_expansion_s =
      std::numeric_limits<double>::infinity();
  const auto u = unstable_direction(sys);
  const auto s = stable_direction(sys);
  const int rays = 33;
  for (const RatPoint& p : sample_grid) {
    for (bool stable_side : {false, true}) {
      Mat j = jacobian(sys, p, stable_side);
      const auto& axis = stable_side ? s : u;
      for (int r = 0; r < rays; ++r) {
        double t = -aperture + 2.0 * aperture * r / (rays - 1);
        auto w = rotate(axis, t);
        std::array<double, 2> jw = {j[0][0] * w[0] + j[0][1] * w[1],
                                    j[1][0] * w[0] + j[1][1] * w[1]};
        double expansion = std::hypot(jw[0], jw[1]);
        double ang = line_angle(jw, axis);
        if (stable_side) {
          rep.min_expansion_s = std::min(rep.min_expansion_s, expansion);
          rep.max_image_angle_s = std::max(rep.max_image_angle_s, ang);
          if (!(expansion > 1.0) || !(ang < aperture)) rep.stable_ok = false;
        } else {
          rep.min_expansion_u = std::min(rep.min_expansion_u, expansion);
          rep.max_image_angle_u = std::max(rep.max_image_angle_u, ang);
          if (!(expansion > 1.0) || !(ang < aperture)) rep.unstable_ok = false;
        }
      }
    }
  }
  return rep;
}

} // namespace homcount
