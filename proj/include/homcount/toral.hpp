#ifndef HOMCOUNT_TORAL_HPP
#define HOMCOUNT_TORAL_HPP

#include <array>
#include <vector>

#include "homcount/point.hpp"

namespace homcount {

/// Hyperbolic automorphism of the 2-torus given by an integer matrix
/// with determinant +-1 and no eigenvalue on the unit circle.
class TorusAutomorphism {
 public:
  /// Throws std::invalid_argument unless |det| = 1 and the matrix is
  /// hyperbolic.
  explicit TorusAutomorphism(std::array<std::array<long, 2>, 2> m);

  static TorusAutomorphism cat_map() {
    return TorusAutomorphism({{{2, 1}, {1, 1}}});
  }

  long entry(int i, int j) const { return m_[i][j]; }
  long det() const { return det_; }

  double lambda_u() const { return lambda_u_; } // |.| > 1
  double lambda_s() const { return lambda_s_; } // |.| < 1
  /// unit eigenvectors for lambda_u / lambda_s
  std::array<double, 2> unstable_dir() const { return vu_; }
  std::array<double, 2> stable_dir() const { return vs_; }

  /// k-fold application, exact; result reduced mod 1 to [0,1)^2.
  RatPoint apply(const RatPoint& p, long k = 1) const;

  /// All solutions of (A^n - I)x = 0 mod Z^2, exact, in [0,1)^2.
  /// The count equals |det(A^n - I)|.
  std::vector<RatPoint> periodic_points(int n) const;

  /// |det(A^n - I)|.
  BigInt periodic_point_count(int n) const;

 private:
  std::array<std::array<long, 2>, 2> m_;
  long det_;
  double lambda_u_, lambda_s_;
  std::array<double, 2> vu_, vs_;
};

} // namespace homcount

#endif // HOMCOUNT_TORAL_HPP
