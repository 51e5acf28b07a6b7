#ifndef HOMCOUNT_BIGINT_HPP
#define HOMCOUNT_BIGINT_HPP

#include <gmpxx.h>
#include <cmath>
#include <string>

namespace homcount {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Natural log of a positive BigInt, accurate to double precision
/// regardless of magnitude.
inline double log_big(const BigInt& v) {
  signed long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

} // namespace homcount

#endif // HOMCOUNT_BIGINT_HPP
