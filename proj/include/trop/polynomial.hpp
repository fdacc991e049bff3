/*
 * Sparse exact polynomials.
 *
 * UnivarPoly       Z[t] (one formal variable; callers name it q, t or L
 *                  at serialization time only).
 * LaurentBivarPoly Z[u^{+-1}, v^{+-1}]; negative exponents are legal
 *                  intermediates, final results of the geometric pipelines
 *                  are asserted Laurent-free by their callers.
 *
 * Representation invariant for both: no zero coefficient is ever stored,
 * so is_zero() == terms empty and operator== is structural.
 */
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "trop/numeric.hpp"

namespace trop {

class UnivarPoly {
public:
  UnivarPoly() = default;
  explicit UnivarPoly(const BigInt& c) {
    if (c != 0) terms_[0] = c;
  }
  explicit UnivarPoly(long c) : UnivarPoly(BigInt(c)) {}

  static UnivarPoly monomial(long e, const BigInt& c = BigInt(1)) {
    UnivarPoly p;
    if (c != 0) p.terms_[e] = c;
    return p;
  }
  /* The formal variable itself. */
  static UnivarPoly var() { return monomial(1); }

  bool is_zero() const { return terms_.empty(); }
  /* Degree of the zero polynomial is reported as -1. */
  long degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  long low_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }

  BigInt coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  BigInt leading_coeff() const {
    return terms_.empty() ? BigInt(0) : terms_.rbegin()->second;
  }

  const std::map<long, BigInt>& terms() const { return terms_; }

  UnivarPoly& operator+=(const UnivarPoly& o);
  UnivarPoly& operator-=(const UnivarPoly& o);
  UnivarPoly operator+(const UnivarPoly& o) const;
  UnivarPoly operator-(const UnivarPoly& o) const;
  UnivarPoly operator-() const;
  UnivarPoly operator*(const UnivarPoly& o) const;
  UnivarPoly operator*(const BigInt& c) const;
  bool operator==(const UnivarPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const UnivarPoly& o) const { return terms_ != o.terms_; }

  UnivarPoly pow(long n) const;

  UnivarPoly derivative() const;

  /* Keep only the terms of degree strictly less than `bound`. */
  UnivarPoly truncate_below(long bound) const;

  BigRat eval(const BigRat& x) const;
  BigInt eval_int(const BigInt& x) const;

  /* Coefficients c_0..c_deg as a dense ascending list ([] for zero). */
  std::vector<BigInt> coeff_list() const;

  /* Human-readable form, e.g. "q^2 - 3*q + 3"; var names the variable. */
  std::string str(const std::string& var = "t") const;

  void set_term(long e, const BigInt& c) {
    if (c == 0)
      terms_.erase(e);
    else
      terms_[e] = c;
  }

private:
  std::map<long, BigInt> terms_;
};

/* Quotient of num by den; throws InvariantError("NonExactDivision") when the
 * division leaves a remainder.  den must be nonzero. */
UnivarPoly exact_divide(const UnivarPoly& num, const UnivarPoly& den);

class LaurentBivarPoly {
public:
  using Exp = std::array<long, 2>;  // (u exponent, v exponent)

  LaurentBivarPoly() = default;
  explicit LaurentBivarPoly(const BigInt& c) {
    if (c != 0) terms_[{0, 0}] = c;
  }
  explicit LaurentBivarPoly(long c) : LaurentBivarPoly(BigInt(c)) {}

  static LaurentBivarPoly monomial(long pu, long pv, const BigInt& c = BigInt(1)) {
    LaurentBivarPoly p;
    if (c != 0) p.terms_[{pu, pv}] = c;
    return p;
  }
  /* Substitute t = u*v into a one-variable polynomial. */
  static LaurentBivarPoly from_univar_uv(const UnivarPoly& p);
  /* Substitute t = v/u into a one-variable polynomial. */
  static LaurentBivarPoly from_univar_u_inv_v(const UnivarPoly& p);

  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(long pu, long pv) const {
    auto it = terms_.find({pu, pv});
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  const std::map<Exp, BigInt>& terms() const { return terms_; }

  LaurentBivarPoly& operator+=(const LaurentBivarPoly& o);
  LaurentBivarPoly& operator-=(const LaurentBivarPoly& o);
  LaurentBivarPoly operator+(const LaurentBivarPoly& o) const;
  LaurentBivarPoly operator-(const LaurentBivarPoly& o) const;
  LaurentBivarPoly operator-() const;
  LaurentBivarPoly operator*(const LaurentBivarPoly& o) const;
  LaurentBivarPoly operator*(const BigInt& c) const;
  bool operator==(const LaurentBivarPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentBivarPoly& o) const { return terms_ != o.terms_; }

  LaurentBivarPoly pow(long n) const;

  /* Multiply by u^du v^dv. */
  LaurentBivarPoly shift(long du, long dv) const;

  /* True iff every exponent is componentwise non-negative. */
  bool laurent_free() const;
  /* True iff invariant under u <-> v. */
  bool symmetric_uv() const;

  long min_u_exp() const;
  long min_v_exp() const;
  long max_u_exp() const;
  long max_v_exp() const;

  BigRat eval(const BigRat& u, const BigRat& v) const;
  /* v := 1 specialization, landing in Z[u^{+-1}] (exponent = u exponent). */
  UnivarPoly specialize_v_to_1() const;

  std::string str(const std::string& u = "u", const std::string& v = "v") const;

  void set_term(long pu, long pv, const BigInt& c) {
    if (c == 0)
      terms_.erase({pu, pv});
    else
      terms_[{pu, pv}] = c;
  }

private:
  std::map<Exp, BigInt> terms_;
};

/* Exact division in the Laurent ring.  Quotient exponents are confined to the
 * box implied by num and den; leaving it proves the division is not exact. */
LaurentBivarPoly exact_divide(const LaurentBivarPoly& num,
                              const LaurentBivarPoly& den);

}  // namespace trop
