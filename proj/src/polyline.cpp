#include "homcount/polyline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace homcount {

namespace {
double wrap01(double v) {
  double w = v - std::floor(v);
  return w < 1.0 ? w : 0.0;
}
} // namespace

double TorusPolyline::Piece::len() const { return std::hypot(dx, dy); }

void TorusPolyline::append(double x, double y, double dx, double dy,
                           bool new_chain) {
  const double len = std::hypot(dx, dy);
  if (!(len > 0.0)) return;
  const bool was_empty = pieces_.empty();
  const int parts = std::max(1, static_cast<int>(std::ceil(len / max_gap_)));
  for (int i = 0; i < parts; ++i) {
    double t0 = static_cast<double>(i) / parts;
    double ax = x + t0 * dx, ay = y + t0 * dy;
    if (on_torus_) {
      ax = wrap01(ax);
      ay = wrap01(ay);
    }
    Piece p;
    p.x = ax;
    p.y = ay;
    p.dx = dx / parts;
    p.dy = dy / parts;
    p.arc0 = total_len_;
    pieces_.push_back(p);
    total_len_ += p.len();
  }
  if (new_chain || was_empty) ++chains_;
}

TorusPolyline TorusPolyline::segment(bool on_torus, double max_gap, double x0,
                                     double y0, double x1, double y1) {
  TorusPolyline c(on_torus, max_gap);
  c.append(x0, y0, x1 - x0, y1 - y0, true);
  return c;
}

namespace {

struct GridIndex {
  double cell;
  double ox, oy; // origin
  int nx, ny;
  bool torus;
  std::unordered_map<long, std::vector<int>> cells;

  long key(int ix, int iy) const {
    if (torus) {
      ix = ((ix % nx) + nx) % nx;
      iy = ((iy % ny) + ny) % ny;
    }
    return static_cast<long>(ix) * 1000003L + iy;
  }
  void insert(const TorusPolyline::Piece& p, int id) {
    double x0 = std::min(p.x, p.x + p.dx), x1 = std::max(p.x, p.x + p.dx);
    double y0 = std::min(p.y, p.y + p.dy), y1 = std::max(p.y, p.y + p.dy);
    int ix0 = static_cast<int>(std::floor((x0 - ox) / cell));
    int ix1 = static_cast<int>(std::floor((x1 - ox) / cell));
    int iy0 = static_cast<int>(std::floor((y0 - oy) / cell));
    int iy1 = static_cast<int>(std::floor((y1 - oy) / cell));
    for (int ix = ix0; ix <= ix1; ++ix)
      for (int iy = iy0; iy <= iy1; ++iy) cells[key(ix, iy)].push_back(id);
  }
  void gather(const TorusPolyline::Piece& p, std::vector<int>& out,
              std::vector<char>& seen) const {
    double x0 = std::min(p.x, p.x + p.dx), x1 = std::max(p.x, p.x + p.dx);
    double y0 = std::min(p.y, p.y + p.dy), y1 = std::max(p.y, p.y + p.dy);
    int ix0 = static_cast<int>(std::floor((x0 - ox) / cell)) - 1;
    int ix1 = static_cast<int>(std::floor((x1 - ox) / cell)) + 1;
    int iy0 = static_cast<int>(std::floor((y0 - oy) / cell)) - 1;
    int iy1 = static_cast<int>(std::floor((y1 - oy) / cell)) + 1;
    for (int ix = ix0; ix <= ix1; ++ix)
      for (int iy = iy0; iy <= iy1; ++iy) {
        auto it = cells.find(key(ix, iy));
        if (it == cells.end()) continue;
        for (int id : it->second)
          if (!seen[id]) {
            seen[id] = 1;
            out.push_back(id);
          }
      }
  }
};

double cross2(double ax, double ay, double bx, double by) {
  return ax * by - ay * bx;
}

} // namespace

IntersectionSet intersections(const TorusPolyline& a, const TorusPolyline& b,
                              double angle_min, double dedup_tol) {
  if (a.on_torus() != b.on_torus())
    throw std::invalid_argument("curves live in different spaces");
  const bool torus = a.on_torus();
  IntersectionSet out;
  if (a.pieces().empty() || b.pieces().empty()) return out;

  GridIndex grid;
  grid.cell = std::max(a.max_gap(), b.max_gap());
  grid.torus = torus;
  if (torus) {
    grid.ox = grid.oy = 0.0;
    grid.nx = grid.ny =
        std::max(1, static_cast<int>(std::floor(1.0 / grid.cell)));
    grid.cell = 1.0 / grid.nx; // cells tile the torus exactly
  } else {
    double lox = 1e300, loy = 1e300;
    for (const auto& p : b.pieces()) {
      lox = std::min({lox, p.x, p.x + p.dx});
      loy = std::min({loy, p.y, p.y + p.dy});
    }
    grid.ox = lox;
    grid.oy = loy;
    grid.nx = grid.ny = 1 << 30; // unbounded plane grid, keys by cell index
  }
  for (int i = 0; i < static_cast<int>(b.pieces().size()); ++i)
    grid.insert(b.pieces()[i], i);

  std::vector<char> seen(b.pieces().size(), 0);
  std::vector<int> cand;
  std::vector<IntersectionRecord> raw;
  const int off_lo = torus ? -1 : 0, off_hi = torus ? 1 : 0;

  for (const auto& pa : a.pieces()) {
    cand.clear();
    grid.gather(pa, cand, seen);
    for (int id : cand) seen[id] = 0;
    for (int id : cand) {
      const auto& pb = b.pieces()[id];
      for (int ox = off_lo; ox <= off_hi; ++ox)
        for (int oy = off_lo; oy <= off_hi; ++oy) {
          const double bx = pb.x + ox, by = pb.y + oy;
          const double denom = cross2(pa.dx, pa.dy, pb.dx, pb.dy);
          const double scale = (std::fabs(pa.dx) + std::fabs(pa.dy)) *
                               (std::fabs(pb.dx) + std::fabs(pb.dy));
          if (std::fabs(denom) <= 1e-14 * scale) continue; // parallel
          const double rx = bx - pa.x, ry = by - pa.y;
          const double s = cross2(rx, ry, pb.dx, pb.dy) / denom;
          const double t = cross2(rx, ry, pa.dx, pa.dy) / denom;
          const double ptol = 1e-9;
          if (s < -ptol || s > 1 + ptol || t < -ptol || t > 1 + ptol) continue;
          IntersectionRecord r;
          double px = pa.x + s * pa.dx, py = pa.y + s * pa.dy;
          if (torus) {
            px = wrap01(px);
            py = wrap01(py);
          }
          r.x = px;
          r.y = py;
          const double dot = pa.dx * pb.dx + pa.dy * pb.dy;
          const double crs = cross2(pa.dx, pa.dy, pb.dx, pb.dy);
          r.angle = std::atan2(std::fabs(crs), std::fabs(dot));
          r.arc_a = pa.arc0 + s * pa.len();
          r.arc_b = pb.arc0 + t * pb.len();
          raw.push_back(r);
        }
    }
  }

  // deterministic dedup: sort by arcs, then cluster within dedup_tol
  std::sort(raw.begin(), raw.end(), [](const auto& l, const auto& r) {
    if (l.arc_a != r.arc_a) return l.arc_a < r.arc_a;
    return l.arc_b < r.arc_b;
  });
  auto dist = [&](const IntersectionRecord& l, const IntersectionRecord& r) {
    double dx = l.x - r.x, dy = l.y - r.y;
    if (torus) {
      dx -= std::round(dx);
      dy -= std::round(dy);
    }
    return std::hypot(dx, dy);
  };
  std::unordered_map<long, std::vector<int>> buckets;
  std::vector<IntersectionRecord> kept;
  const double bcell = std::max(dedup_tol, 1e-12);
  auto bkey = [&](double x, double y) {
    long ix = static_cast<long>(std::floor(x / bcell));
    long iy = static_cast<long>(std::floor(y / bcell));
    return ix * 1000003L + iy;
  };
  for (const auto& r : raw) {
    bool merged = false;
    for (long ix = -1; ix <= 1 && !merged; ++ix)
      for (long iy = -1; iy <= 1 && !merged; ++iy) {
        double qx = r.x + ix * bcell, qy = r.y + iy * bcell;
        if (torus) {
          qx = wrap01(qx);
          qy = wrap01(qy);
        }
        auto it = buckets.find(bkey(qx, qy));
        if (it == buckets.end()) continue;
        for (int id : it->second)
          if (dist(kept[id], r) <= dedup_tol) {
            if (r.angle > kept[id].angle) kept[id] = r;
            ++out.dedup_merges;
            merged = true;
            break;
          }
      }
    if (!merged) {
      kept.push_back(r);
      buckets[bkey(r.x, r.y)].push_back(static_cast<int>(kept.size()) - 1);
    }
  }

  out.min_angle = M_PI / 2;
  for (const auto& r : kept) {
    if (r.angle >= angle_min) {
      out.accepted.push_back(r);
      out.min_angle = std::min(out.min_angle, r.angle);
    } else {
      out.grazing.push_back(r);
    }
  }
  if (out.accepted.empty()) out.min_angle = 0.0;
  return out;
}

} // namespace homcount
