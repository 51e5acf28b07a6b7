#include "homcount/prime_orbits.hpp"

namespace homcount {

std::vector<int> mobius_sieve(int n) {
  std::vector<int> mu(n + 1, 1);
  std::vector<char> composite(n + 1, 0);
  std::vector<int> primes;
  for (int i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (int p : primes) {
      long long ip = 1LL * i * p;
      if (ip > n) break;
      composite[ip] = 1;
      if (i % p == 0) {
        mu[ip] = 0;
        break;
      }
      mu[ip] = -mu[i];
    }
  }
  return mu;
}

PrimeOrbitCensus prime_orbit_census(const ShiftGraph& g, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  auto bad = validate_graph(g);
  if (!bad.empty()) throw std::invalid_argument("invalid graph: " + bad[0]);
  const auto tr = trace_powers(g, n);
  const auto mu = mobius_sieve(n);
  PrimeOrbitCensus out;
  out.cumulative = 0;
  for (int m = 1; m <= n; ++m) {
    BigInt s = 0;
    for (int d = 1; d <= m; ++d)
      if (m % d == 0 && mu[d] != 0) s += mu[d] * tr[m / d];
    // points of least period m come in full orbits of size m
    BigInt orbits;
    mpz_divexact_ui(orbits.get_mpz_t(), s.get_mpz_t(),
                    static_cast<unsigned long>(m));
    out.per_period[m] = orbits;
    out.cumulative += orbits;
  }
  return out;
}

} // namespace homcount
