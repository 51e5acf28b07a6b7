#include "homcount/toral.hpp"

#include <cmath>

namespace homcount {

namespace {

using Mat2 = std::array<std::array<BigInt, 2>, 2>;

Mat2 mat_id() { return {{{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}}}; }

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  Mat2 r = {{{BigInt(0), BigInt(0)}, {BigInt(0), BigInt(0)}}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

Mat2 mat_pow(Mat2 b, unsigned long k) {
  Mat2 r = mat_id();
  while (k > 0) {
    if (k & 1) r = mat_mul(r, b);
    b = mat_mul(b, b);
    k >>= 1;
  }
  return r;
}

// Diagonalize M over Z by elementary row/column operations; only the
// column transform V and the diagonal are needed to enumerate the
// solutions of Mx = 0 mod Z^2.
struct Snf {
  Mat2 d, v;
};

Snf smith_form(Mat2 m) {
  Mat2 v = mat_id();
  auto swap_rows = [&](int i, int j) { std::swap(m[i], m[j]); };
  auto swap_cols = [&](int i, int j) {
    std::swap(m[0][i], m[0][j]);
    std::swap(m[1][i], m[1][j]);
    std::swap(v[0][i], v[0][j]);
    std::swap(v[1][i], v[1][j]);
  };
  auto row_sub = [&](int dst, int src, const BigInt& q) {
    m[dst][0] -= q * m[src][0];
    m[dst][1] -= q * m[src][1];
  };
  auto col_sub = [&](int dst, int src, const BigInt& q) {
    m[0][dst] -= q * m[0][src];
    m[1][dst] -= q * m[1][src];
    v[0][dst] -= q * v[0][src];
    v[1][dst] -= q * v[1][src];
  };
  for (int iter = 0; iter < 256; ++iter) {
    if (m[0][0] == 0) {
      if (m[1][0] != 0)
        swap_rows(0, 1);
      else if (m[0][1] != 0)
        swap_cols(0, 1);
      else
        swap_rows(0, 1), swap_cols(0, 1);
      continue;
    }
    if (m[1][0] != 0) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), m[1][0].get_mpz_t(), m[0][0].get_mpz_t());
      row_sub(1, 0, q);
      if (m[1][0] != 0) {
        swap_rows(0, 1);
        continue;
      }
    }
    if (m[0][1] != 0) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), m[0][1].get_mpz_t(), m[0][0].get_mpz_t());
      col_sub(1, 0, q);
      if (m[0][1] != 0) {
        swap_cols(0, 1);
        continue;
      }
    }
    if (m[1][0] == 0 && m[0][1] == 0) break;
  }
  if (m[0][0] < 0) {
    m[0][0] = -m[0][0];
    m[1][0] = -m[1][0];
  }
  if (m[1][1] < 0) {
    m[1][1] = -m[1][1];
    v[0][1] = -v[0][1];
    v[1][1] = -v[1][1];
  }
  return {m, v};
}

} // namespace

TorusAutomorphism::TorusAutomorphism(std::array<std::array<long, 2>, 2> m)
    : m_(m) {
  const long a = m[0][0], b = m[0][1], c = m[1][0], d = m[1][1];
  det_ = a * d - b * c;
  if (det_ != 1 && det_ != -1)
    throw std::invalid_argument("matrix must have determinant +-1");
  const long tr = a + d;
  if ((det_ == 1 && std::labs(tr) <= 2) || (det_ == -1 && tr == 0))
    throw std::invalid_argument("non-hyperbolic: eigenvalue on the unit circle");
  const double trd = static_cast<double>(tr);
  const double disc = std::sqrt(trd * trd - 4.0 * static_cast<double>(det_));
  double l1 = (trd + disc) / 2.0, l2 = (trd - disc) / 2.0;
  if (std::fabs(l1) < std::fabs(l2)) std::swap(l1, l2);
  lambda_u_ = l1;
  lambda_s_ = l2;
  auto eigvec = [&](double lam) -> std::array<double, 2> {
    // rows of A - lam I are parallel; take the better-conditioned kernel
    double v1x = static_cast<double>(b), v1y = lam - static_cast<double>(a);
    double v2x = lam - static_cast<double>(d), v2y = static_cast<double>(c);
    double n1 = std::hypot(v1x, v1y), n2 = std::hypot(v2x, v2y);
    if (n1 >= n2) return {v1x / n1, v1y / n1};
    return {v2x / n2, v2y / n2};
  };
  vu_ = eigvec(lambda_u_);
  vs_ = eigvec(lambda_s_);
}

RatPoint TorusAutomorphism::apply(const RatPoint& p, long k) const {
  Mat2 base;
  if (k >= 0) {
    base = {{{BigInt(m_[0][0]), BigInt(m_[0][1])},
             {BigInt(m_[1][0]), BigInt(m_[1][1])}}};
  } else {
    // adjugate over det gives the exact integer inverse
    long s = det_;
    base = {{{BigInt(s * m_[1][1]), BigInt(-s * m_[0][1])},
             {BigInt(-s * m_[1][0]), BigInt(s * m_[0][0])}}};
  }
  Mat2 pw = mat_pow(base, static_cast<unsigned long>(k >= 0 ? k : -k));
  Rational nx = Rational(pw[0][0]) * p.x + Rational(pw[0][1]) * p.y;
  Rational ny = Rational(pw[1][0]) * p.x + Rational(pw[1][1]) * p.y;
  return {rat_mod1(nx), rat_mod1(ny)};
}

BigInt TorusAutomorphism::periodic_point_count(int n) const {
  Mat2 a = {{{BigInt(m_[0][0]), BigInt(m_[0][1])},
             {BigInt(m_[1][0]), BigInt(m_[1][1])}}};
  Mat2 an = mat_pow(a, static_cast<unsigned long>(n));
  an[0][0] -= 1;
  an[1][1] -= 1;
  BigInt det = an[0][0] * an[1][1] - an[0][1] * an[1][0];
  return abs(det);
}

std::vector<RatPoint> TorusAutomorphism::periodic_points(int n) const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Mat2 a = {{{BigInt(m_[0][0]), BigInt(m_[0][1])},
             {BigInt(m_[1][0]), BigInt(m_[1][1])}}};
  Mat2 an = mat_pow(a, static_cast<unsigned long>(n));
  an[0][0] -= 1;
  an[1][1] -= 1;
  Snf s = smith_form(an);
  const BigInt d1 = s.d[0][0], d2 = s.d[1][1];
  std::vector<RatPoint> pts;
  BigInt total = d1 * d2;
  if (mpz_fits_ulong_p(total.get_mpz_t()))
    pts.reserve(mpz_get_ui(total.get_mpz_t()));
  for (BigInt i = 0; i < d1; ++i)
    for (BigInt j = 0; j < d2; ++j) {
      Rational y1(i, d1), y2(j, d2);
      y1.canonicalize();
      y2.canonicalize();
      Rational x1 = Rational(s.v[0][0]) * y1 + Rational(s.v[0][1]) * y2;
      Rational x2 = Rational(s.v[1][0]) * y1 + Rational(s.v[1][1]) * y2;
      pts.push_back({rat_mod1(x1), rat_mod1(x2)});
    }
  return pts;
}

} // namespace homcount
