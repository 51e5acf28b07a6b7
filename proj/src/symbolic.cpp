#include "homcount/symbolic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace homcount {

namespace {

long long floor_mod(long long i, long long m) {
  long long r = i % m;
  return r < 0 ? r + m : r;
}

Word rotate_right(Word w, int k) {
  if (w.empty()) return w;
  k = static_cast<int>(floor_mod(k, static_cast<long long>(w.size())));
  std::rotate(w.rbegin(), w.rbegin() + k, w.rend());
  return w;
}

Word rotate_left(Word w, int k) {
  if (w.empty()) return w;
  k = static_cast<int>(floor_mod(k, static_cast<long long>(w.size())));
  std::rotate(w.begin(), w.begin() + k, w.end());
  return w;
}

} // namespace

bool word_admissible(const ShiftGraph& g, const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!g.edge(w[i], w[i + 1])) return false;
  for (int v : w)
    if (v < 0 || v >= g.size()) return false;
  return true;
}

Word primitive_root(const Word& w) {
  const int n = static_cast<int>(w.size());
  for (int p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (int i = p; i < n && ok; ++i) ok = (w[i] == w[i - p]);
    if (ok) return Word(w.begin(), w.begin() + p);
  }
  return w;
}

std::string word_str(const ShiftGraph& g, const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += g.label(w[i]);
  }
  return s;
}

SymbolicPoint::SymbolicPoint(Word left_period, Word core, Word right_period)
    : left_(std::move(left_period)), core_(std::move(core)),
      right_(std::move(right_period)) {
  if (left_.empty() || right_.empty())
    throw std::invalid_argument("periodic tails must be nonempty");
  canonicalize();
}

SymbolicPoint SymbolicPoint::periodic(const Word& w) {
  return SymbolicPoint(w, {}, w);
}

void SymbolicPoint::canonicalize() {
  left_ = primitive_root(left_);
  right_ = primitive_root(right_);
  // The core sheds its last symbol whenever the right tail, extended
  // one step backward, already produces it.  The anchor at index 0 is
  // part of the identity of the point, so nothing is shed on the left.
  while (!core_.empty() && core_.back() == right_.back()) {
    core_.pop_back();
    right_ = rotate_right(right_, 1);
  }
}

int SymbolicPoint::at(long long i) const {
  const long long m = static_cast<long long>(core_.size());
  if (i < 0)
    return left_[floor_mod(i, static_cast<long long>(left_.size()))];
  if (i < m) return core_[i];
  return right_[floor_mod(i - m, static_cast<long long>(right_.size()))];
}

bool SymbolicPoint::is_periodic() const {
  if (!core_.empty() || left_.size() != right_.size()) return false;
  return left_ == right_;
}

int SymbolicPoint::period() const {
  if (!is_periodic()) throw std::logic_error("point is not periodic");
  return static_cast<int>(left_.size());
}

SymbolicPoint SymbolicPoint::shift_right(int k) const {
  if (k < 0) throw std::invalid_argument("shift_right needs k >= 0");
  if (k == 0) return *this;
  Word new_core(static_cast<std::size_t>(k) + core_.size());
  for (int j = 0; j < k; ++j) new_core[j] = at(j - k);
  std::copy(core_.begin(), core_.end(), new_core.begin() + k);
  return SymbolicPoint(rotate_right(left_, k), std::move(new_core), right_);
}

std::optional<long long> SymbolicPoint::first_violation(
    const ShiftGraph& g) const {
  const long long l = static_cast<long long>(left_.size());
  const long long r = static_cast<long long>(right_.size());
  const long long m = static_cast<long long>(core_.size());
  // one full left period, the core, one full right period covers every
  // distinct transition
  for (long long i = -l - 1; i < m + r; ++i) {
    int a = at(i), b = at(i + 1);
    if (a < 0 || a >= g.size() || b < 0 || b >= g.size() || !g.edge(a, b))
      return i;
  }
  return std::nullopt;
}

bool SymbolicPoint::admissible(const ShiftGraph& g) const {
  return !first_violation(g).has_value();
}

bool SymbolicPoint::operator==(const SymbolicPoint& o) const {
  return left_ == o.left_ && core_ == o.core_ && right_ == o.right_;
}

bool SymbolicPoint::operator<(const SymbolicPoint& o) const {
  if (core_ != o.core_) return core_ < o.core_;
  if (left_ != o.left_) return left_ < o.left_;
  return right_ < o.right_;
}

std::string SymbolicPoint::str(const ShiftGraph& g) const {
  std::ostringstream os;
  os << "(" << word_str(g, left_) << ")^inf | " << word_str(g, core_)
     << " | (" << word_str(g, right_) << ")^inf";
  return os.str();
}

Order order_of(const ShiftGraph& g, const SymbolicPoint& x,
               const SymbolicPoint& pbar) {
  if (!pbar.is_periodic())
    throw std::invalid_argument("reference point must be periodic");
  if (!x.admissible(g) || !pbar.admissible(g))
    throw std::invalid_argument("points must be admissible");
  if (x == pbar)
    throw std::invalid_argument(
        "a homoclinic point excludes the periodic point itself");
  const long long m = pbar.period();
  const long long core_len = static_cast<long long>(x.core().size());
  const long long rlen = static_cast<long long>(x.right().size());
  const long long llen = static_cast<long long>(x.left().size());

  // Beyond the core both sequences are periodic, so disagreement is
  // periodic with period lcm; one clean window certifies agreement on
  // the whole tail.
  const long long lcm_r = std::lcm(rlen, m);
  for (long long j = core_len; j < core_len + lcm_r; ++j)
    if (x.at(j) != pbar.at(j))
      throw std::invalid_argument("x is not homoclinic to pbar (right tail)");
  const long long lcm_l = std::lcm(llen, m);
  for (long long j = -lcm_l; j < 0; ++j)
    if (x.at(j) != pbar.at(j))
      throw std::invalid_argument("x is not homoclinic to pbar (left tail)");

  long long d_first = -1, d_last = -1;
  for (long long j = 0; j < core_len; ++j)
    if (x.at(j) != pbar.at(j)) {
      if (d_first < 0) d_first = j;
      d_last = j;
    }
  if (d_first < 0)
    throw std::invalid_argument(
        "a homoclinic point excludes the periodic point itself");
  Order o;
  o.theta_s = d_last + 1;
  o.theta_u = std::max(0LL, -d_first + 1);
  return o;
}

BigInt homoclinic_census(const ShiftGraph& g, const SymbolicPoint& pbar,
                         long long n) {
  if (!pbar.is_periodic())
    throw std::invalid_argument("reference point must be periodic");
  if (!pbar.admissible(g))
    throw std::invalid_argument("pbar must be admissible");
  if (n < 0) throw std::invalid_argument("order must be >= 0");
  if (n <= 1) return 0; // theta_u = 0 forces x_0 = pbar_0, so theta_s != 1
  // All points with orders (n,0) agree with pbar outside (0,n): they are
  // the admissible paths pbar_0 -> ... -> pbar_n of length n whose
  // (n-1)-st symbol differs from pbar_{n-1}.
  const BigMatrix a = BigMatrix::from_graph(g);
  const BigMatrix an1 = a.pow(static_cast<unsigned long>(n - 1));
  const BigMatrix an = an1 * a;
  const int p0 = pbar.at(0);
  const int pn = pbar.at(n);
  const int pn1 = pbar.at(n - 1);
  return an.at(p0, pn) - an1.at(p0, pn1);
}

Enumeration enumerate_homoclinic(const ShiftGraph& g,
                                 const SymbolicPoint& pbar, long long n,
                                 std::size_t limit) {
  if (!pbar.is_periodic())
    throw std::invalid_argument("reference point must be periodic");
  if (limit == 0) throw std::invalid_argument("limit must be positive");
  Enumeration out;
  if (n <= 1) return out;
  const int m = pbar.period();
  Word pword(m);
  for (int i = 0; i < m; ++i) pword[i] = pbar.at(i);

  if (n > 10000) throw std::invalid_argument("enumeration order too large");
  const int nn = static_cast<int>(n);
  const int p0 = pbar.at(0);
  const int pn = pbar.at(n);
  const int pn1 = pbar.at(n - 1);
  const Word right = rotate_left(pword, static_cast<int>(n % m));

  std::set<SymbolicPoint> found;
  bool overflow = false;
  Word core(static_cast<std::size_t>(nn));
  core[0] = p0;
  // DFS over free symbols x_1..x_{n-1} in vertex-index order; the final
  // symbol must differ from pbar_{n-1} and connect to pbar_n.
  auto rec = [&](auto&& self, int depth) -> void {
    if (overflow) return;
    if (depth == nn) {
      found.insert(SymbolicPoint(pword, core, right));
      if (found.size() > limit) overflow = true;
      return;
    }
    for (int v : g.out_neighbors(core[depth - 1])) {
      if (depth == nn - 1 && (v == pn1 || !g.edge(v, pn))) continue;
      core[depth] = v;
      self(self, depth + 1);
      if (overflow) return;
    }
  };
  rec(rec, 1);
  if (overflow) {
    out.truncated = true;
    auto it = found.begin();
    std::advance(it, static_cast<long>(limit));
    found.erase(it, found.end());
  }
  out.points.assign(found.begin(), found.end());
  return out;
}

SymbolicPoint build_gamma(const ShiftGraph& g, const SymbolicPoint& pbar,
                          const SymbolicPoint& qbar, const Word& block,
                          int K, int L) {
  if (!pbar.is_periodic() || !qbar.is_periodic())
    throw std::invalid_argument("pbar and qbar must be periodic");
  if (K < 1 || L < 1) throw std::invalid_argument("K and L must be >= 1");
  const int m = pbar.period();
  const int l = qbar.period();
  Word P(m), Q(l);
  for (int i = 0; i < m; ++i) P[i] = pbar.at(i);
  for (int i = 0; i < l; ++i) Q[i] = qbar.at(i);
  if (m == l) {
    for (int r = 0; r < m; ++r)
      if (rotate_left(P, r) == Q)
        throw std::invalid_argument("qbar orbit equals pbar orbit");
  }
  if (!word_admissible(g, block))
    throw std::invalid_argument("inadmissible block");

  // Explicit symbols from index 0 on; indices <= 0 agree with pbar by
  // construction of the left tail.
  Word core;
  core.push_back(P[0]);
  for (int i = 1; i < m; ++i) core.push_back(P[i]);
  for (int k = 0; k < K; ++k) core.insert(core.end(), P.begin(), P.end());
  const Word c = connect(g, P[m - 1], Q[0]);
  if (c.size() >= 2)
    core.insert(core.end(), c.begin() + 1, c.end() - 1); // interior only
  for (int k = 0; k < L; ++k) core.insert(core.end(), Q.begin(), Q.end());
  core.insert(core.end(), block.begin(), block.end());
  for (int k = 0; k < L; ++k) core.insert(core.end(), Q.begin(), Q.end());

  // Land the p-run on pbar's own phase: the edge count of the return
  // connector is chosen so that P[0] arrives at an index divisible by m.
  const long long e_f = static_cast<long long>(core.size()) - 1;
  const int residue = static_cast<int>(floor_mod(-e_f, m));
  auto d = connect_with_residue(g, Q[l - 1], P[0], residue, m);
  if (!d)
    throw std::runtime_error(
        "no phase-aligned return connector exists in this graph");
  core.insert(core.end(), d->begin() + 1, d->end());
  for (int i = 1; i < m; ++i) core.push_back(P[i]);
  for (int k = 0; k < K - 1; ++k) core.insert(core.end(), P.begin(), P.end());

  SymbolicPoint gamma(P, std::move(core), P);
  if (auto bad = gamma.first_violation(g))
    throw std::invalid_argument("inadmissible concatenation at index " +
                                std::to_string(*bad));
  return gamma;
}

} // namespace homcount
