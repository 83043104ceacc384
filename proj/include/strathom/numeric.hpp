/*
 * numeric.hpp
 *
 * Exact scalar types: arbitrary-precision integers and rationals,
 * backed by GMP. Rationals are kept canonical (lowest terms, positive
 * denominator) by mpq_class itself.
 */

#ifndef STRATHOM_NUMERIC_HPP
#define STRATHOM_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace strathom {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// g = gcd(a,b) together with x, y such that a*x + b*y = g.
inline BigInt gcd_ext(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  BigInt g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

inline int signum(const BigInt& a) { return mpz_sgn(a.get_mpz_t()); }
inline int signum(const BigRational& a) { return mpq_sgn(a.get_mpq_t()); }

inline bool abs_less(const BigInt& a, const BigInt& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

/// Truncating division: a = q*b + r with |r| < |b| and sign(r) = sign(a).
inline std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
  if (signum(b) == 0) throw std::domain_error("divmod: division by zero");
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {q, r};
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }
inline std::string to_string(const BigRational& a) { return a.get_str(); }

/// Fits-in-int64 conversion used by the JSON layer.
inline bool fits_int64(const BigInt& a) {
  return a >= BigInt(INT64_MIN) && a <= BigInt(INT64_MAX);
}

}  // namespace strathom

#endif
