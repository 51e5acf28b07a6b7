#ifndef HOMCOUNT_PRIME_ORBITS_HPP
#define HOMCOUNT_PRIME_ORBITS_HPP

#include <map>

#include "homcount/shift_graph.hpp"

namespace homcount {

struct PrimeOrbitCensus {
  std::map<int, BigInt> per_period; // m -> number of least-period-m orbits
  BigInt cumulative;                // orbits of least period <= n
};

/// Mobius function values mu(1..n).
std::vector<int> mobius_sieve(int n);

/// Exact orbit counts by Mobius inversion of the fixed-point traces:
/// per_period[m] = (1/m) sum_{d|m} mu(d) trace(A^{m/d}).
PrimeOrbitCensus prime_orbit_census(const ShiftGraph& g, int n);

} // namespace homcount

#endif // HOMCOUNT_PRIME_ORBITS_HPP
