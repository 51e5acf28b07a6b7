// Test-only reference implementations, kept deliberately independent of
// the library's counting paths: everything here enumerates.
#ifndef HOMCOUNT_TEST_ORACLES_HPP
#define HOMCOUNT_TEST_ORACLES_HPP

#include <map>
#include <set>
#include <vector>

#include "homcount/shift_graph.hpp"
#include "homcount/symbolic.hpp"

namespace homcount::oracle {

// Primitivity by literal boolean matrix powers up to the Wielandt bound.
inline bool mixing_by_matrix_power(const ShiftGraph& g) {
  const int n = g.size();
  const int bound = (n - 1) * (n - 1) + 1;
  std::vector<std::vector<char>> p(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p[i][j] = static_cast<char>(g.at(i, j) != 0);
  auto all_positive = [&](const std::vector<std::vector<char>>& m) {
    for (const auto& row : m)
      for (char c : row)
        if (!c) return false;
    return true;
  };
  auto mul = [&](const std::vector<std::vector<char>>& a,
                 const std::vector<std::vector<char>>& b) {
    std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (a[i][k])
          for (int j = 0; j < n; ++j) r[i][j] |= b[k][j];
    return r;
  };
  auto cur = p;
  for (int e = 1; e <= bound; ++e) {
    if (all_positive(cur)) return true;
    cur = mul(cur, p);
  }
  return false;
}

// All admissible words of a given length starting at v0 (inclusive).
inline void admissible_words(const ShiftGraph& g, int v0, int len,
                             std::vector<Word>& out) {
  Word w{v0};
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(w.size()) == len) {
      out.push_back(w);
      return;
    }
    for (int v : g.out_neighbors(w.back())) {
      w.push_back(v);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
}

// #{x : sigma^n x = x, x_0 = w0} by enumerating closing words.
inline long periodic_census_brute(const ShiftGraph& g, int w0, int n) {
  std::vector<Word> words;
  admissible_words(g, w0, n, words);
  long c = 0;
  for (const auto& w : words)
    if (g.edge(w.back(), w0)) ++c;
  return c;
}

// Least-period orbit counts by enumerating all cyclic words (necklaces).
inline std::map<int, long> prime_orbits_brute(const ShiftGraph& g,
                                                   int n_max) {
  std::map<int, long> per_period;
  std::set<Word> seen; // canonical rotation of each orbit found
  for (int n = 1; n <= n_max; ++n) per_period[n] = 0;
  for (int n = 1; n <= n_max; ++n) {
    for (int v0 = 0; v0 < g.size(); ++v0) {
      std::vector<Word> words;
      admissible_words(g, v0, n, words);
      for (const auto& w : words) {
        if (!g.edge(w.back(), w[0])) continue;
        Word prim = primitive_root(w);
        if (static_cast<int>(prim.size()) != n) continue; // counted at its least period
        Word best = prim;
        for (std::size_t r = 1; r < prim.size(); ++r) {
          Word rot(prim.begin() + r, prim.end());
          rot.insert(rot.end(), prim.begin(), prim.begin() + r);
          if (rot < best) best = rot;
        }
        if (seen.insert(best).second) ++per_period[n];
      }
    }
  }
  return per_period;
}

// Shortest-path length between vertices by plain BFS (no tie-break).
// Matches connect's convention at u == v: trivial only with a self-loop.
inline int path_length_brute(const ShiftGraph& g, int u, int v) {
  if (u == v && g.edge(u, u)) return 0;
  if (u == v) {
    int best = -1;
    for (int w : g.out_neighbors(u)) {
      int len = w == v ? 1 : path_length_brute(g, w, v) + 1;
      if (len > 0 && (best < 0 || len < best)) best = len;
    }
    return best;
  }
  std::vector<int> dist(g.size(), -1);
  std::vector<int> q{u};
  dist[u] = 0;
  for (std::size_t h = 0; h < q.size(); ++h) {
    int x = q[h];
    for (int w : g.out_neighbors(x)) {
      if (dist[w] < 0) {
        dist[w] = dist[x] + 1;
        q.push_back(w);
      }
    }
  }
  return dist[v];
}

// Homoclinic points of order (n,0) by enumerating every admissible core
// of length <= n+2 and filtering through order_of.  Deduplicates by
// canonical form.
inline std::vector<SymbolicPoint> homoclinic_brute(const ShiftGraph& g,
                                                   const SymbolicPoint& pbar,
                                                   long long n) {
  const int m = pbar.period();
  Word pword(m);
  for (int i = 0; i < m; ++i) pword[i] = pbar.at(i);
  std::set<SymbolicPoint> hits;
  const int max_len = static_cast<int>(n) + 2;
  for (int len = 1; len <= max_len; ++len) {
    for (int v0 = 0; v0 < g.size(); ++v0) {
      std::vector<Word> words;
      admissible_words(g, v0, len, words);
      for (const auto& w : words) {
        Word right(m);
        for (int i = 0; i < m; ++i)
          right[i] = pbar.at(len + i); // phase of the resumed tail
        SymbolicPoint x(pword, w, right);
        if (!x.admissible(g)) continue;
        try {
          Order o = order_of(g, x, pbar);
          if (o.theta_s == n && o.theta_u == 0) hits.insert(x);
        } catch (const std::invalid_argument&) {
          // not homoclinic or equals pbar
        }
      }
    }
  }
  return {hits.begin(), hits.end()};
}

} // namespace homcount::oracle

#endif
