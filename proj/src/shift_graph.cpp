#include "homcount/shift_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>

namespace homcount {

ShiftGraph::ShiftGraph(int vertex_count, std::vector<std::vector<int>> adjacency,
                       std::vector<std::string> labels)
    : n_(vertex_count), adj_(std::move(adjacency)), labels_(std::move(labels)) {
  if (n_ <= 0) throw std::invalid_argument("vertex_count must be positive");
  if (static_cast<int>(adj_.size()) != n_)
    throw std::invalid_argument("adjacency row count mismatch");
  for (const auto& row : adj_)
    if (static_cast<int>(row.size()) != n_)
      throw std::invalid_argument("adjacency column count mismatch");
  if (labels_.empty()) {
    labels_.resize(n_);
    for (int v = 0; v < n_; ++v) labels_[v] = std::to_string(v);
  }
  if (static_cast<int>(labels_.size()) != n_)
    throw std::invalid_argument("label count mismatch");
  out_.resize(n_);
  in_.resize(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (adj_[i][j] == 1) {
        out_[i].push_back(j);
        in_[j].push_back(i);
      }
}

ShiftGraph ShiftGraph::full_shift(int n) {
  return ShiftGraph(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 1)));
}

ShiftGraph ShiftGraph::golden_mean() {
  return ShiftGraph(2, {{1, 1}, {1, 0}}, {"a", "b"});
}

std::vector<std::string> validate_graph(const ShiftGraph& g) {
  std::vector<std::string> bad;
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      if (g.at(i, j) != 0 && g.at(i, j) != 1)
        bad.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) +
                      ") is not 0 or 1");
  for (int v = 0; v < g.size(); ++v) {
    if (g.out_neighbors(v).empty())
      bad.push_back("vertex " + g.label(v) + " without outgoing edge");
    if (g.in_neighbors(v).empty())
      bad.push_back("vertex " + g.label(v) + " without incoming edge");
  }
  return bad;
}

bool is_valid(const ShiftGraph& g) { return validate_graph(g).empty(); }

namespace {

// vertices reachable from s along `next` adjacency lists
std::vector<char> reachable(const ShiftGraph& g, int s, bool forward) {
  std::vector<char> seen(g.size(), 0);
  std::deque<int> q{s};
  seen[s] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    const auto& nb = forward ? g.out_neighbors(v) : g.in_neighbors(v);
    for (int w : nb)
      if (!seen[w]) {
        seen[w] = 1;
        q.push_back(w);
      }
  }
  return seen;
}

} // namespace

bool is_irreducible(const ShiftGraph& g) {
  auto fwd = reachable(g, 0, true);
  auto bwd = reachable(g, 0, false);
  for (int v = 0; v < g.size(); ++v)
    if (!fwd[v] || !bwd[v]) return false;
  return true;
}

int graph_period(const ShiftGraph& g) {
  if (!is_irreducible(g)) return 0;
  // BFS levels from vertex 0; the period is gcd over edges of
  // level(u) + 1 - level(v).
  std::vector<int> level(g.size(), -1);
  std::deque<int> q{0};
  level[0] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.out_neighbors(v))
      if (level[w] < 0) {
        level[w] = level[v] + 1;
        q.push_back(w);
      }
  }
  long long p = 0;
  for (int u = 0; u < g.size(); ++u)
    for (int w : g.out_neighbors(u))
      p = std::gcd(p, static_cast<long long>(level[u] + 1 - level[w]));
  return static_cast<int>(p < 0 ? -p : p);
}

bool is_mixing(const ShiftGraph& g) { return graph_period(g) == 1; }

double perron_root(const ShiftGraph& g) {
  if (!is_irreducible(g))
    throw std::invalid_argument(
        "spectral entropy requires an irreducible graph");
  const int n = g.size();
  if (n == 1) return static_cast<double>(g.at(0, 0));
  // Power iteration on A+I, which is primitive for irreducible A;
  // Collatz-Wielandt bounds give a rigorous enclosure of lambda+1.
  std::vector<double> x(n, 1.0), y(n);
  double lo = 0.0, hi = 0.0;
  for (int it = 0; it < 100000; ++it) {
    for (int i = 0; i < n; ++i) {
      double s = x[i];
      for (int j : g.out_neighbors(i)) s += x[j];
      y[i] = s;
    }
    lo = std::numeric_limits<double>::infinity();
    hi = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    double norm = *std::max_element(y.begin(), y.end());
    for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    if (hi - lo <= 1e-13 * hi) break;
  }
  return 0.5 * (lo + hi) - 1.0;
}

double spectral_entropy(const ShiftGraph& g) {
  double lam = perron_root(g);
  // Perron root of a valid shift graph is >= 1; clamp the n=1 loop case
  // exactly to zero entropy.
  return lam <= 1.0 ? 0.0 : std::log(lam);
}

BigMatrix BigMatrix::identity(int n) {
  BigMatrix m(n);
  for (int i = 0; i < n; ++i) m.a_[i][i] = 1;
  return m;
}

BigMatrix BigMatrix::from_graph(const ShiftGraph& g) {
  BigMatrix m(g.size());
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) m.a_[i][j] = g.at(i, j);
  return m;
}

BigMatrix BigMatrix::operator*(const BigMatrix& o) const {
  BigMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if (a_[i][k] == 0) continue;
      for (int j = 0; j < n_; ++j) r.a_[i][j] += a_[i][k] * o.a_[k][j];
    }
  return r;
}

BigMatrix BigMatrix::pow(unsigned long k) const {
  BigMatrix r = identity(n_), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

BigInt BigMatrix::trace() const {
  BigInt t = 0;
  for (int i = 0; i < n_; ++i) t += a_[i][i];
  return t;
}

BigInt periodic_census(const ShiftGraph& g, int w0, int n) {
  if (w0 < 0 || w0 >= g.size())
    throw std::out_of_range("vertex index out of range");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return BigMatrix::from_graph(g).pow(static_cast<unsigned long>(n)).at(w0, w0);
}

std::vector<BigInt> trace_powers(const ShiftGraph& g, int n) {
  std::vector<BigInt> tr(n + 1);
  BigMatrix a = BigMatrix::from_graph(g);
  BigMatrix p = a;
  for (int m = 1; m <= n; ++m) {
    tr[m] = p.trace();
    if (m < n) p = p * a;
  }
  return tr;
}

std::vector<int> connect(const ShiftGraph& g, int u, int v) {
  if (u < 0 || u >= g.size() || v < 0 || v >= g.size())
    throw std::out_of_range("vertex index out of range");
  if (u == v) {
    // the trivial path stands in for a splice only when u -> u is an
    // edge; otherwise return the shortest genuine excursion
    if (g.edge(u, u)) return {u};
    int best = -1, best_len = -1;
    std::vector<int> best_path;
    for (int w : g.out_neighbors(u)) {
      std::vector<int> tail;
      try {
        tail = connect(g, w, v);
      } catch (const std::runtime_error&) {
        continue;
      }
      int len = static_cast<int>(tail.size());
      if (best_len < 0 || len < best_len ||
          (len == best_len && w < best)) {
        best = w;
        best_len = len;
        best_path = std::move(tail);
      }
    }
    if (best_len < 0) throw std::runtime_error("unreachable");
    std::vector<int> path{u};
    path.insert(path.end(), best_path.begin(), best_path.end());
    return path;
  }
  // distances to v over reversed edges, then a greedy lexicographic walk
  std::vector<int> dist(g.size(), -1);
  std::deque<int> q{v};
  dist[v] = 0;
  while (!q.empty()) {
    int w = q.front();
    q.pop_front();
    for (int x : g.in_neighbors(w))
      if (dist[x] < 0) {
        dist[x] = dist[w] + 1;
        q.push_back(x);
      }
  }
  if (dist[u] < 0) throw std::runtime_error("unreachable");
  std::vector<int> path{u};
  int cur = u;
  while (cur != v) {
    int best = -1;
    for (int w : g.out_neighbors(cur))
      if (dist[w] == dist[cur] - 1 && (best < 0 || w < best)) best = w;
    cur = best;
    path.push_back(cur);
  }
  return path;
}

std::optional<std::vector<int>> connect_with_residue(const ShiftGraph& g,
                                                     int u, int v,
                                                     int residue, int modulus) {
  if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
  residue = ((residue % modulus) + modulus) % modulus;
  const int n = g.size();
  // BFS on the product graph (vertex, path length mod modulus); parent
  // scan in ascending vertex order keeps the result lexicographically
  // least among shortest admissible paths.
  auto id = [&](int vert, int r) { return vert * modulus + r; };
  std::vector<int> parent(n * modulus, -2);
  std::deque<int> q{id(u, 0)};
  parent[id(u, 0)] = -1;
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    int vert = s / modulus, r = s % modulus;
    if (vert == v && r == residue) break;
    for (int w : g.out_neighbors(vert)) {
      int t = id(w, (r + 1) % modulus);
      if (parent[t] == -2) {
        parent[t] = s;
        q.push_back(t);
      }
    }
  }
  int goal = id(v, residue);
  if (parent[goal] == -2) return std::nullopt;
  std::vector<int> path;
  for (int s = goal; s != -1; s = parent[s]) path.push_back(s / modulus);
  std::reverse(path.begin(), path.end());
  return path;
}

ShiftGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1, lineno = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::string> labels;
  bool matrix_mode = false;
  int matrix_row = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("graph line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (matrix_mode && matrix_row < n) {
      std::istringstream rs(line);
      for (int j = 0; j < n; ++j)
        if (!(rs >> adj[matrix_row][j])) fail("short matrix row");
      ++matrix_row;
      continue;
    }
    if (tok == "vertices") {
      if (!(ls >> n) || n <= 0) fail("bad vertex count");
      adj.assign(n, std::vector<int>(n, 0));
      labels.assign(n, "");
      for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
    } else if (tok == "edge") {
      if (n < 0) fail("edge before vertices");
      int i, j;
      if (!(ls >> i >> j)) fail("edge needs two indices");
      if (i < 0 || i >= n || j < 0 || j >= n) fail("edge index out of range");
      adj[i][j] = 1;
    } else if (tok == "matrix") {
      if (n < 0) fail("matrix before vertices");
      matrix_mode = true;
      matrix_row = 0;
    } else if (tok == "label") {
      if (n < 0) fail("label before vertices");
      int v;
      std::string name;
      if (!(ls >> v >> name)) fail("label needs index and name");
      if (v < 0 || v >= n) fail("label index out of range");
      labels[v] = name;
    } else {
      fail("unknown directive '" + tok + "'");
    }
  }
  if (n < 0) throw std::runtime_error("graph text missing 'vertices' line");
  if (matrix_mode && matrix_row != n)
    throw std::runtime_error("graph matrix block incomplete");
  return ShiftGraph(n, std::move(adj), std::move(labels));
}

} // namespace homcount
