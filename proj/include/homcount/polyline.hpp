#ifndef HOMCOUNT_POLYLINE_HPP
#define HOMCOUNT_POLYLINE_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace homcount {

/// Piecewise-linear curve, possibly disconnected, on the 2-torus or in
/// the plane.  Each piece stores its anchor (wrapped to [0,1)^2 on the
/// torus) plus a lift displacement, so pieces may leave the unit cell;
/// the wrap marker is implicit in anchor+displacement.  Pieces are kept
/// no longer than max_gap and carry cumulative arc length.
class TorusPolyline {
 public:
  struct Piece {
    double x, y;   // anchor
    double dx, dy; // displacement to the far end (lift)
    double arc0;   // arc length at the anchor
    double len() const;
    std::array<double, 2> end() const { return {x + dx, y + dy}; }
  };

  TorusPolyline(bool on_torus, double max_gap)
      : on_torus_(on_torus), max_gap_(max_gap) {}

  bool on_torus() const { return on_torus_; }
  double max_gap() const { return max_gap_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  std::size_t vertex_count() const { return pieces_.size() + chains_; }
  double total_length() const { return total_len_; }

  /// Appends a straight segment, splitting it into <= max_gap pieces.
  /// `new_chain` marks a discontinuity from the previous piece.
  void append(double x, double y, double dx, double dy, bool new_chain = false);

  /// Straight segment between two endpoints.
  static TorusPolyline segment(bool on_torus, double max_gap, double x0,
                               double y0, double x1, double y1);

 private:
  bool on_torus_;
  double max_gap_;
  std::vector<Piece> pieces_;
  std::size_t chains_ = 0;
  double total_len_ = 0.0;
};

struct IntersectionRecord {
  double x, y;    // location (wrapped on the torus)
  double angle;   // acute crossing angle in (0, pi/2]
  double arc_a;   // arc parameter on the first curve
  double arc_b;   // arc parameter on the second curve
};

struct IntersectionSet {
  std::vector<IntersectionRecord> accepted;
  std::vector<IntersectionRecord> grazing; // angle below the threshold
  long dedup_merges = 0;
  double min_angle = 0.0; // smallest accepted angle
};

/// All pairwise crossings of two refined polylines, found through a
/// uniform spatial grid with cell size >= max of both max_gaps.
/// Crossings with angle < angle_min land in `grazing`; points within
/// dedup_tol of each other are merged, keeping the larger angle.
IntersectionSet intersections(const TorusPolyline& a, const TorusPolyline& b,
                              double angle_min, double dedup_tol);

} // namespace homcount

#endif // HOMCOUNT_POLYLINE_HPP
