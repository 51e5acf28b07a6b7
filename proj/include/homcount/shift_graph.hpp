#ifndef HOMCOUNT_SHIFT_GRAPH_HPP
#define HOMCOUNT_SHIFT_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homcount/bigint.hpp"

namespace homcount {

/// Finite directed graph given by a 0/1 adjacency matrix; defines a
/// two-sided vertex shift.  Immutable after construction.
class ShiftGraph {
 public:
  ShiftGraph(int vertex_count, std::vector<std::vector<int>> adjacency,
             std::vector<std::string> labels = {});

  static ShiftGraph full_shift(int n);
  static ShiftGraph golden_mean();

  int size() const { return n_; }
  int at(int i, int j) const { return adj_[i][j]; }
  bool edge(int i, int j) const { return adj_[i][j] == 1; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  const std::string& label(int v) const { return labels_[v]; }

  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> out_, in_;
};

/// Violated invariants, empty when the graph is a valid vertex shift.
std::vector<std::string> validate_graph(const ShiftGraph& g);

bool is_valid(const ShiftGraph& g);

/// Strong connectivity of the directed graph.
bool is_irreducible(const ShiftGraph& g);

/// gcd of cycle lengths; 0 for graphs that are not strongly connected.
int graph_period(const ShiftGraph& g);

/// Primitivity of the adjacency matrix (irreducible with period 1).
bool is_mixing(const ShiftGraph& g);

/// log of the Perron root, via Collatz-Wielandt bounds on A+I.
/// Throws std::invalid_argument for non-irreducible graphs.
double spectral_entropy(const ShiftGraph& g);

/// Perron root itself, same convergence criterion as spectral_entropy.
double perron_root(const ShiftGraph& g);

/// Square matrix with arbitrary-precision entries; enough arithmetic
/// for exact path counting.
class BigMatrix {
 public:
  explicit BigMatrix(int n) : n_(n), a_(n, std::vector<BigInt>(n)) {}
  static BigMatrix identity(int n);
  static BigMatrix from_graph(const ShiftGraph& g);

  int size() const { return n_; }
  BigInt& at(int i, int j) { return a_[i][j]; }
  const BigInt& at(int i, int j) const { return a_[i][j]; }

  BigMatrix operator*(const BigMatrix& o) const;
  BigMatrix pow(unsigned long k) const;
  BigInt trace() const;

 private:
  int n_;
  std::vector<std::vector<BigInt>> a_;
};

/// Exact number of n-periodic shift points with x_0 = w0, i.e. the
/// (w0,w0) entry of the n-th adjacency power.
BigInt periodic_census(const ShiftGraph& g, int w0, int n);

/// trace(A^m) for m = 1..n; index 0 unused.
std::vector<BigInt> trace_powers(const ShiftGraph& g, int n);

/// Shortest path from u to v inclusive of endpoints; among shortest,
/// lexicographically least in vertex indices.  For u == v the trivial
/// single-vertex path is returned when u carries a self-loop, else the
/// shortest nontrivial cycle through u.  Throws
/// std::runtime_error("unreachable") when no path exists.
std::vector<int> connect(const ShiftGraph& g, int u, int v);

/// Shortest path u -> v whose edge count is congruent to residue mod
/// modulus; same tie-break.  Returns nullopt when unreachable.
std::optional<std::vector<int>> connect_with_residue(const ShiftGraph& g,
                                                     int u, int v,
                                                     int residue, int modulus);

/// Parses the text form: a `vertices N` line followed by `edge i j`
/// lines and/or a `matrix` block of N rows; `label i name` optional.
ShiftGraph parse_graph(const std::string& text);

} // namespace homcount

#endif // HOMCOUNT_SHIFT_GRAPH_HPP
