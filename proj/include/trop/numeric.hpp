/*
 * Exact scalar arithmetic.  BigInt/BigRat are GMP's canonical types: BigRat
 * is always reduced with positive denominator, which is exactly the
 * invariant the rest of the library relies on.  No floating point is used
 * anywhere downstream of this header.
 */
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "trop/error.hpp"

namespace trop {

using BigInt = mpz_class;
using BigRat = mpq_class;

using IVec = std::vector<BigInt>;
using QVec = std::vector<BigRat>;
using IMat = std::vector<IVec>;
using QMat = std::vector<QVec>;

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline std::string to_string(const BigRat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline BigInt parse_bigint(const std::string& s) {
  try {
    if (s.empty()) throw std::invalid_argument("empty");
    return BigInt(s);
  } catch (const std::invalid_argument&) {
    fail_validation("ParseError", "not an integer literal: '" + s + "'");
  }
}

/* Accepts "p" or "p/q"; canonicalizes. */
inline BigRat parse_bigrat(const std::string& s) {
  try {
    if (s.empty()) throw std::invalid_argument("empty");
    BigRat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail_validation("ParseError", "not a rational literal: '" + s + "'");
  }
}

inline long to_long(const BigInt& z) {
  if (!z.fits_slong_p())
    fail_invariant("Overflow", "integer does not fit in a machine word: " + to_string(z));
  return z.get_si();
}

inline BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline BigRat pow_rat(const BigRat& base, long e) {
  if (e == 0) return BigRat(1);
  if (base == 0 && e < 0)
    fail_invariant("DivisionByZero", "0 raised to a negative power");
  BigRat b = e > 0 ? base : BigRat(1) / base;
  long n = e > 0 ? e : -e;
  BigRat acc(1);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

inline BigInt pow_int(const BigInt& base, long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace trop
