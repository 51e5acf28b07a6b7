#include "homcount/horseshoe.hpp"

namespace homcount {

AffineHorseshoe::AffineHorseshoe(Rational kappa, Rational mu)
    : kappa_(std::move(kappa)), mu_(std::move(mu)) {
  if (!(kappa_ > 0 && kappa_ < Rational(1, 2)))
    throw std::invalid_argument("kappa must lie in (0, 1/2)");
  if (!(mu_ > 2)) throw std::invalid_argument("mu must exceed 2");
  if (mu_ * kappa_ > 1)
    throw std::invalid_argument("mu*kappa > 1: strips would overflow");
}

std::optional<int> AffineHorseshoe::strip(const RatPoint& p) const {
  if (p.x < 0 || p.x > 1 || p.y < 0 || p.y > 1) return std::nullopt;
  if (p.y <= kappa_) return 0;
  if (p.y >= 1 - kappa_) return 1;
  return std::nullopt;
}

std::optional<int> AffineHorseshoe::vstrip(const RatPoint& p) const {
  if (p.x < 0 || p.x > 1 || p.y < 0 || p.y > 1) return std::nullopt;
  if (p.x <= kappa_) return 0;
  if (p.x >= 1 - kappa_) return 1;
  return std::nullopt;
}

RatPoint AffineHorseshoe::apply(const RatPoint& p, long k) const {
  RatPoint cur = p;
  const Rational c = 1 - kappa_;
  for (long t = 0; t < (k >= 0 ? k : -k); ++t) {
    if (k >= 0) {
      auto s = strip(cur);
      if (!s) throw EscapeError(t, false);
      if (*s == 0)
        cur = {kappa_ * cur.x, mu_ * cur.y};
      else
        cur = {c + kappa_ * cur.x, mu_ * (cur.y - c)};
    } else {
      auto s = vstrip(cur);
      if (!s) throw EscapeError(t, true);
      if (*s == 0)
        cur = {cur.x / kappa_, cur.y / mu_};
      else
        cur = {(cur.x - c) / kappa_, c + cur.y / mu_};
    }
  }
  return cur;
}

AffineHorseshoe::Itinerary AffineHorseshoe::itinerary(const RatPoint& p,
                                                      int n_fwd,
                                                      int n_bwd) const {
  Itinerary it;
  RatPoint cur = p;
  for (int t = 0; t < n_fwd; ++t) {
    auto s = strip(cur);
    if (!s) throw EscapeError(t, false);
    it.future.push_back(*s);
    cur = apply(cur, 1);
  }
  cur = p;
  for (int t = 1; t <= n_bwd; ++t) {
    try {
      cur = apply(cur, -1);
    } catch (const EscapeError&) {
      throw EscapeError(t - 1, true);
    }
    auto s = strip(cur);
    if (!s) throw EscapeError(t, true);
    it.past.push_back(*s);
  }
  std::reverse(it.past.begin(), it.past.end());
  return it;
}

RatPoint AffineHorseshoe::point_from_itinerary(const SymbolicPoint& s,
                                               long offset) const {
  for (int v : s.left())
    if (v != 0 && v != 1)
      throw std::invalid_argument("itinerary symbols must be 0/1");
  for (int v : s.core())
    if (v != 0 && v != 1)
      throw std::invalid_argument("itinerary symbols must be 0/1");
  for (int v : s.right())
    if (v != 0 && v != 1)
      throw std::invalid_argument("itinerary symbols must be 0/1");

  const Rational c = 1 - kappa_;
  auto sym = [&](long long i) { return s.at(i + offset); };

  // y is determined by the future: y_t = c*s_t + y_{t+1}/mu, summed
  // from the exactly periodic tail backward to time 0.
  const long long core_len = static_cast<long long>(s.core().size());
  long long tail_start = core_len - offset; // future index where the right tail rules
  if (tail_start < 0)
    tail_start += ((-tail_start / static_cast<long long>(s.right().size())) + 1) *
                  static_cast<long long>(s.right().size());
  const int r = static_cast<int>(s.right().size());
  // periodic tail value: sum_{j>=0} c*b_j mu^{-j} over the repeating word
  Rational tail = 0;
  {
    Rational acc = 0, w = 1;
    for (int j = 0; j < r; ++j) {
      if (sym(tail_start + j) == 1) acc += c * w;
      w /= mu_;
    }
    tail = acc / (1 - w); // w = mu^{-r} here
  }
  Rational y = tail;
  for (long long t = tail_start - 1; t >= 0; --t) {
    y = y / mu_;
    if (sym(t) == 1) y += c;
  }

  // x is determined by the past: x_{t+1} = c*s_t + kappa*x_t, iterated
  // up from the exactly periodic left tail.
  long long left_end = -offset; // indices < left_end follow the left tail
  if (left_end > 0) left_end = 0;
  const int l = static_cast<int>(s.left().size());
  Rational xtail = 0;
  {
    // x at time left_end given purely periodic symbols below it
    Rational acc = 0, w = 1;
    for (int j = 0; j < l; ++j) {
      if (sym(left_end - 1 - j) == 1) acc += c * w;
      w *= kappa_;
    }
    xtail = acc / (1 - w); // w = kappa^l
  }
  Rational x = xtail;
  for (long long t = left_end; t < 0; ++t) {
    x = kappa_ * x;
    if (sym(t) == 1) x += c;
  }
  return {x, y};
}

} // namespace homcount
