#include "trop/hodge.hpp"

#include <algorithm>

#include "trop/cone.hpp"
#include "trop/error.hpp"

namespace trop {

UnivarPoly stilde(const LatticePolytope& P, const FaceLattice& fl,
                  size_t face_index) {
  const PolytopeFace& Q = fl.faces.at(face_index);
  UnivarPoly total;
  for (size_t j = 0; j < fl.faces.size(); ++j) {
    if (!fl.poset.leq(j, face_index)) continue;
    const PolytopeFace& sub = fl.faces[j];
    UnivarPoly hstar = sub.dim < 0 ? UnivarPoly(1)
                                   : P.face_polytope(sub).ehrhart_hstar();
    UnivarPoly g = fl.poset.interval(j, face_index).g_polynomial();
    UnivarPoly term = hstar * g;
    total += ((Q.dim - sub.dim) % 2 == 0) ? term : -term;
  }
  return total;
}

LaurentBivarPoly bb_epoly(const LatticePolytope& Q) {
  if (Q.is_empty())
    fail_validation("DegenerateInput", "E-polynomial of the empty polytope");
  const long D = Q.dim();
  if (D == 0) return LaurentBivarPoly();

  const FaceLattice& fl = Q.face_lattice();
  UnivarPoly tm1 = UnivarPoly::var() - UnivarPoly(1);
  LaurentBivarPoly total = LaurentBivarPoly::from_univar_uv(tm1.pow(D));

  LaurentBivarPoly inner;
  for (size_t j = 0; j < fl.faces.size(); ++j) {
    UnivarPoly st = stilde(Q, fl, j);
    if (st.is_zero()) continue;
    UnivarPoly g_dual =
        fl.poset.interval(j, fl.full_index).dual().g_polynomial();
    inner += LaurentBivarPoly::from_univar_u_inv_v(st) *
             LaurentBivarPoly::from_univar_uv(g_dual) *
             LaurentBivarPoly::monomial(fl.faces[j].dim + 1, 0);
  }
  total += (D - 1) % 2 == 0 ? inner : -inner;

  LaurentBivarPoly quotient = total.shift(-1, -1);
  if (!quotient.laurent_free())
    fail_invariant("NonExactDivision",
                   "hypersurface E-polynomial: closing uv division inexact");
  return quotient;
}

LaurentBivarPoly e_generic_fiber(const LatticePolytope& P) {
  const FaceLattice& fl = P.face_lattice();
  LaurentBivarPoly total;
  for (const PolytopeFace& f : fl.faces) {
    if (f.dim < 0) continue;
    total += bb_epoly(P.face_polytope(f));
  }
  return total;
}

LaurentBivarPoly e_limit(const Subdivision& S) {
  const long D = S.parent.dim();
  UnivarPoly one_minus_t = UnivarPoly(1) - UnivarPoly::var();
  LaurentBivarPoly total;
  for (const SubdivisionCell& cell : S.cells) {
    if (cell.dim == 0) continue;  // points carry no hypersurface
    std::vector<IVec> pts;
    for (size_t i : cell.point_indices) pts.push_back(S.points[i]);
    LatticePolytope Q =
        LatticePolytope::from_points(pts, S.parent.ambient_dim() + 1);
    long exponent = (D - cell.dim) - cell.interiority;
    total += bb_epoly(Q) *
             LaurentBivarPoly::from_univar_uv(one_minus_t.pow(exponent));
  }
  return total;
}

BigInt euler_generic(const LatticePolytope& P) {
  const FaceLattice& fl = P.face_lattice();
  BigInt total(0);
  for (const PolytopeFace& f : fl.faces) {
    if (f.dim < 1) continue;
    BigInt vol = P.face_polytope(f).normalized_volume();
    total += (f.dim - 1) % 2 == 0 ? vol : -vol;
  }
  return total;
}

BigInt genus(const LatticePolytope& P) {
  return BigInt(P.interior_lattice_points().size());
}

BigInt limit_h_p0(const Subdivision& S, long p) {
  const long d = S.parent.dim() - 1;
  if (p < 0 || (d >= 0 && p > d))
    fail_validation("DegenerateInput", "Hodge index out of range");
  BigInt total(0);
  for (size_t ci = 0; ci < S.cells.size(); ++ci) {
    const SubdivisionCell& cell = S.cells[ci];
    if (cell.interiority != 0) continue;
    bool wanted = p > 0 ? cell.dim == p + 1 : cell.dim <= 1;
    if (!wanted) continue;
    total += BigInt(S.cell_polytope(ci).interior_lattice_points().size());
  }
  return total;
}

BigInt LimitHodgeTable::at(long m, long p, long q) const {
  auto it = entries.find({m, p, q});
  return it == entries.end() ? BigInt(0) : it->second;
}

void LimitHodgeTable::set(long m, long p, long q, const BigInt& value) {
  if (value == 0)
    entries.erase({m, p, q});
  else
    entries[{m, p, q}] = value;
}

void require_almost_smooth(const LatticePolytope& P) {
  const FaceLattice& fl = P.face_lattice();
  const auto& facets = P.facets();
  for (const PolytopeFace& f : fl.faces) {
    if (f.dim < 1) continue;
    std::vector<IVec> normals;
    for (size_t fi : f.tight_facets) normals.push_back(facets[fi].normal);
    Cone nc = Cone::from_generators(size_t(P.dim()), std::move(normals));
    if (!simplicial_unimodular(nc))
      fail_validation(
          "DegenerateInput",
          "normal cone of a dimension-" + std::to_string(f.dim) +
              " face is not simplicial unimodular; the polytope is not "
              "almost smooth");
  }
}

namespace {

LimitHodgeTable assemble_table(const LatticePolytope& P,
                               const LaurentBivarPoly& e_lim) {
  const long d = P.dim() - 1;
  UnivarPoly hvec = P.h_vector();
  LimitHodgeTable table;
  table.d = d;

  for (long m = 0; m <= 2 * d; ++m) {
    if (m == d || m % 2 != 0) continue;
    BigInt val = hvec.coeff(std::min(m, 2 * d - m) / 2);
    table.set(m, m / 2, m / 2, val);
  }

  for (long p = 0; p <= d; ++p)
    for (long q = 0; q <= d; ++q) {
      BigInt corr(0);
      if (p == q && 2 * p != d) corr = hvec.coeff(std::min(p, d - p));
      BigInt val = e_lim.coeff(p, q) - corr;
      if (d % 2 != 0) val = -val;
      if (val < 0)
        fail_invariant("NegativeHodgeNumber",
                       "limit Hodge number h^{" + std::to_string(p) + "," +
                           std::to_string(q) + "}(H^" + std::to_string(d) +
                           ") computes to " + val.get_str());
      table.set(d, p, q, val);
    }

  if (d % 2 == 0) {
    BigInt primitive = table.at(d, d / 2, d / 2) - hvec.coeff(d / 2);
    if (primitive < 0)
      fail_invariant("NegativeHodgeNumber",
                     "primitive middle Hodge number computes to " +
                         primitive.get_str());
  }
  return table;
}

void check_dimension(const LatticePolytope& P) {
  if (P.dim() < 1)
    fail_validation("DegenerateInput",
                    "hypersurface data needs a polytope of dimension >= 1");
}

}  // namespace

LimitHodgeTable limit_hodge_table(const NewtonData& data) {
  check_dimension(data.parent);
  require_almost_smooth(data.parent);
  return assemble_table(data.parent, e_limit(data));
}

bool EPolyReport::audits_pass() const {
  for (const AuditEntry& a : audit)
    if (!a.advisory && !a.pass) return false;
  return true;
}

std::vector<AuditEntry> audit_report(const EPolyReport& report,
                                     const NewtonData& data) {
  const EPolyReport& r = report;
  std::vector<AuditEntry> out;
  const long d = data.parent.dim() - 1;
  auto push = [&out](const std::string& name, bool pass,
                     bool advisory = false) {
    out.push_back({name, pass, advisory});
  };

  push("v1_identity", r.e_limit.specialize_v_to_1() ==
                          r.e_generic.specialize_v_to_1());
  push("euler_agreement",
       r.e_limit.eval(BigRat(1), BigRat(1)) == BigRat(r.euler) &&
           r.e_generic.eval(BigRat(1), BigRat(1)) == BigRat(r.euler));

  {
    bool ok = r.e_generic.laurent_free() && r.e_generic.max_u_exp() <= d &&
              r.e_generic.max_v_exp() <= d;
    for (long m = 0; ok && m <= 2 * d; ++m)
      for (long p = 0; ok && p <= d; ++p) {
        BigInt row_sum(0);
        for (long q = 0; q <= d; ++q) row_sum += r.table.at(m, p, q);
        BigInt expected = r.e_generic.coeff(p, m - p);
        if (m % 2 != 0) expected = -expected;
        if (row_sum != expected) ok = false;
      }
    push("row_sums", ok);
  }

  {
    bool nonneg = true, sym = true;
    for (const auto& [key, h] : r.table.entries) {
      if (h < 0) nonneg = false;
      if (h != r.table.at(key[0], key[2], key[1])) sym = false;
    }
    push("nonnegative_entries", nonneg);
    push("pq_symmetry", sym);
  }

  {
    bool sym = true, unimodal = true;
    for (long p = 0; p <= d; ++p) {
      for (long i = 0; i <= d - p; ++i) {
        if (r.table.at(d, p + i, i) != r.table.at(d, d - i, d - p - i))
          sym = false;
        if (i < d - p && 2 * (i + 1) <= d - p + 1 &&
            r.table.at(d, p + i, i) > r.table.at(d, p + i + 1, i + 1))
          unimodal = false;
      }
    }
    push("weight_monodromy_symmetry", sym);
    push("weight_monodromy_unimodality", unimodal, /*advisory=*/true);
  }

  if (d >= 1) {
    bool ok = true;
    for (long p = 0; p <= d; ++p)
      if (r.table.at(d, p, 0) != limit_h_p0(data, p)) ok = false;
    push("hpq0_matches_interior_counts", ok);
  }

  {
    BigInt bound;
    bool have = false;
    for (long p = 0; p <= d; ++p) {
      BigInt h = r.e_generic.coeff(p, d - p);
      if (d % 2 != 0) h = -h;
      if (!have || h < bound) { bound = h; have = true; }
    }
    push("betti_bound", have && r.betti_gamma_d <= bound);
  }
  return out;
}

EPolyReport full_report(const NewtonData& data, bool run_audits) {
  const LatticePolytope& P = data.parent;
  check_dimension(P);
  require_almost_smooth(P);

  EPolyReport r;
  r.e_limit = e_limit(data);
  r.e_generic = e_generic_fiber(P);
  r.euler = euler_generic(P);
  r.genus = genus(P);
  r.betti_gamma_d = limit_h_p0(data, 0);
  r.table = assemble_table(P, r.e_limit);
  if (run_audits) r.audit = audit_report(r, data);
  return r;
}

}  // namespace trop
