/*
 * Hodge-theoretic invariants of a degenerating family of torus hypersurfaces
 * described by a lattice polytope with a lifting function.
 *
 * From the induced regular subdivision the module computes the E-polynomial
 * of the generic fiber, the limit (monodromy-weighted) E-polynomial, Euler
 * characteristic, geometric genus, and the full table of limit Hodge
 * numbers, together with a battery of cross-checking audits.
 */
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "trop/polynomial.hpp"
#include "trop/subdivision.hpp"

namespace trop {

/* A Newton polytope with a lifting function is exactly a lifted point
 * configuration; the induced subdivision carries all of it. */
using NewtonData = Subdivision;

/* The correction polynomial S~(Q,t) of a face: the alternating sum over
 * subfaces Q' (the empty face included) of h*_{Q'}(t) g([Q',Q],t).
 * S~(empty) = 1, S~(vertex) = 0, S~(segment of lattice length s) = (s-1)t. */
UnivarPoly stilde(const LatticePolytope& P, const FaceLattice& fl,
                  size_t face_index);

/* E-polynomial of a nondegenerate hypersurface with Newton polytope Q inside
 * a torus of dimension dim Q; 0 for a point.  Exactness of the closing
 * division by uv is asserted (NonExactDivision). */
LaurentBivarPoly bb_epoly(const LatticePolytope& Q);

/* Sum of bb_epoly over all nonempty faces: the E-polynomial of the generic
 * fiber compactified in the toric variety of Q's normal fan. */
LaurentBivarPoly e_generic_fiber(const LatticePolytope& P);

/* Limit E-polynomial: sum over all subdivision cells Q of
 * bb_epoly(Q) (1-uv)^(codim Q - interiority Q). */
LaurentBivarPoly e_limit(const Subdivision& S);

/* Signed volume sum over faces of dimension >= 1: the Euler characteristic
 * of the generic fiber. */
BigInt euler_generic(const LatticePolytope& P);

/* Number of interior lattice points: the geometric genus h^{d,0}. */
BigInt genus(const LatticePolytope& P);

/* Interior-point count over interior cells: dim = p+1 cells for p > 0, and
 * cells of dim <= 1 for p = 0 (the d-th Betti number of the skeleton). */
BigInt limit_h_p0(const Subdivision& S, long p);

struct LimitHodgeTable {
  long d = 0;  // fiber dimension
  std::map<std::array<long, 3>, BigInt> entries;  // (m,p,q) -> h, zeros absent

  BigInt at(long m, long p, long q) const;
  void set(long m, long p, long q, const BigInt& value);
};

/* Hodge numbers of the limit mixed Hodge structure, row by cohomological
 * degree m; entries are asserted non-negative, as is the primitive part of
 * the middle row (NegativeHodgeNumber otherwise).  Requires dim >= 1 and an
 * almost-smooth polytope. */
LimitHodgeTable limit_hodge_table(const NewtonData& data);

/* Every face of dimension >= 1 must have a simplicial unimodular normal
 * cone; DegenerateInput otherwise. */
void require_almost_smooth(const LatticePolytope& P);

struct AuditEntry {
  std::string check;
  bool pass = false;
  bool advisory = false;  // logged but never enforced
};

struct EPolyReport {
  LaurentBivarPoly e_limit;
  LaurentBivarPoly e_generic;
  BigInt euler{0};
  BigInt genus{0};
  BigInt betti_gamma_d{0};
  LimitHodgeTable table;
  std::vector<AuditEntry> audit;

  bool audits_pass() const;  // all non-advisory entries pass
};

/* The audit battery run against a finished report; callers may re-audit a
 * report after the fact (the checks never mutate their input). */
std::vector<AuditEntry> audit_report(const EPolyReport& report,
                                     const NewtonData& data);

EPolyReport full_report(const NewtonData& data, bool run_audits = true);

}  // namespace trop
