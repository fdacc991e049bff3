/*
 * Small exact linear algebra over Z and Q.  Everything here is dense and
 * naive on purpose: matrices never exceed a handful of rows/columns (ambient
 * dimension is capped), and exactness is the requirement, not speed.
 */
#pragma once

#include "trop/numeric.hpp"

namespace trop {

/* Rank of a rational matrix (empty matrix has rank 0). */
long rank_of(const QMat& a);
long rank_of_int(const IMat& a);

/* Basis of { x in Q^n : a x = 0 }, each vector scaled to a primitive
 * integer vector.  `cols` disambiguates n when `a` has no rows. */
IMat kernel_basis(const QMat& a, size_t cols);
IMat kernel_basis_int(const IMat& a, size_t cols);

/* Basis of { x in Z^n : a x = 0 }.  The result is saturated: it generates
 * the full group of integer solutions, not a finite-index subgroup. */
IMat integer_kernel(const IMat& a, size_t cols);

/* Basis of span_Q(rows of gens) intersected with Z^n (a saturated sublattice
 * of Z^n).  Empty input yields the empty basis. */
IMat saturated_lattice_basis(const IMat& gens, size_t cols);

/* Divide by the gcd of the entries; the zero vector is returned unchanged.
 * The sign convention: first nonzero entry positive when `canonical`. */
IVec primitive(IVec v, bool canonical = false);

/* Determinant of a square integer matrix (Bareiss, fraction-free). */
BigInt det_int(IMat a);

/* gcd over all maximal (k x k, k = number of rows) minors; 0 when the rows
 * are dependent.  Rows must not outnumber columns. */
BigInt gcd_maximal_minors(const IMat& a);

/* Solve a x = b over Q.  Returns false when inconsistent; when consistent,
 * fills `x` with one solution (free variables set to 0). */
bool solve(const QMat& a, const QVec& b, QVec& x);

/* Express `target` as an integer combination of the rows of `basis`
 * (assumed Z-linearly independent).  Returns false if `target` is outside
 * the generated lattice. */
bool coords_in_lattice_basis(const IMat& basis, const IVec& target, IVec& coords);

inline BigInt dot(const IVec& a, const IVec& b) {
  BigInt s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline BigRat dot_q(const QVec& a, const QVec& b) {
  BigRat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec to_q(const IVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = BigRat(v[i]);
  return r;
}

inline QMat to_q(const IMat& m) {
  QMat r(m.size());
  for (size_t i = 0; i < m.size(); ++i) r[i] = to_q(m[i]);
  return r;
}

}  // namespace trop
