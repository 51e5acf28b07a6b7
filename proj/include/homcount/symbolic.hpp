#ifndef HOMCOUNT_SYMBOLIC_HPP
#define HOMCOUNT_SYMBOLIC_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "homcount/shift_graph.hpp"

namespace homcount {

/// Finite sequence of vertex indices.
using Word = std::vector<int>;

bool word_admissible(const ShiftGraph& g, const Word& w);

/// Shortest word whose repetition gives w; w itself when primitive.
Word primitive_root(const Word& w);

std::string word_str(const ShiftGraph& g, const Word& w);

/// Doubly-eventually-periodic bi-infinite sequence: left_period repeated
/// over i < 0 (copies ending at index -1), core occupying [0, len),
/// right_period repeated from index len on.  Canonical form has
/// primitive periods and a core with no suffix absorbable into the
/// right tail; equality is canonical-form equality.
class SymbolicPoint {
 public:
  SymbolicPoint(Word left_period, Word core, Word right_period);

  /// The periodic point w^inf (empty core, equal tails).
  static SymbolicPoint periodic(const Word& w);

  const Word& left() const { return left_; }
  const Word& core() const { return core_; }
  const Word& right() const { return right_; }

  int at(long long i) const;
  bool is_periodic() const;
  /// Least period of a periodic point.
  int period() const;

  /// sigma^{-k}: moves the sequence k steps to the right (k >= 0).
  SymbolicPoint shift_right(int k) const;

  bool admissible(const ShiftGraph& g) const;
  /// Index of the first inadmissible transition, or nullopt.
  std::optional<long long> first_violation(const ShiftGraph& g) const;

  bool operator==(const SymbolicPoint& o) const;
  bool operator<(const SymbolicPoint& o) const;

  std::string str(const ShiftGraph& g) const;

 private:
  void canonicalize();
  Word left_, core_, right_;
};

struct Order {
  long long theta_s = 0;
  long long theta_u = 0;
  bool operator==(const Order&) const = default;
};

/// First forward / backward entry times of x into the symbolically
/// localized stable / unstable sets of the periodic point pbar.
/// Throws std::invalid_argument when x equals pbar or is not
/// homoclinic to it.
Order order_of(const ShiftGraph& g, const SymbolicPoint& x,
               const SymbolicPoint& pbar);

/// Exact number of points homoclinic to pbar with orders (n, 0),
/// by path counting.
BigInt homoclinic_census(const ShiftGraph& g, const SymbolicPoint& pbar,
                         long long n);

struct Enumeration {
  std::vector<SymbolicPoint> points; // canonical, sorted
  bool truncated = false;
};

/// Explicit members of the order-(n,0) homoclinic set, up to `limit`.
Enumeration enumerate_homoclinic(const ShiftGraph& g,
                                 const SymbolicPoint& pbar, long long n,
                                 std::size_t limit);

/// Concatenation  p-tail | p^K | connector | q^L | block | q^L |
/// connector | p^K | p-tail, aligned so the sequence agrees with pbar
/// on all indices <= 0 (hence theta_u = 0) and the right tail is
/// phase-aligned with pbar.  The returned point is homoclinic to pbar
/// with theta_s = len(block) + N0, N0 independent of the block content
/// (and, for fixed points, of its length).
SymbolicPoint build_gamma(const ShiftGraph& g, const SymbolicPoint& pbar,
                          const SymbolicPoint& qbar, const Word& block,
                          int K, int L);

} // namespace homcount

#endif // HOMCOUNT_SYMBOLIC_HPP
