#include "trop/complex.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "trop/error.hpp"
#include "trop/hodge.hpp"
#include "trop/linalg.hpp"

namespace trop {

namespace {

IVec homogenize_vertex(const QVec& v) {
  BigInt den(1);
  for (const BigRat& c : v) den = lcm(den, BigInt(c.get_den()));
  IVec out(v.size() + 1);
  for (size_t i = 0; i < v.size(); ++i) {
    BigRat scaled = BigRat(den) * v[i];
    out[i] = BigInt(scaled.get_num());
  }
  out[v.size()] = den;
  return out;
}

std::vector<IVec> hom_generators(const TropicalFace& f) {
  std::vector<IVec> g;
  for (const QVec& v : f.vertices) g.push_back(homogenize_vertex(v));
  for (const IVec& r : f.rays) {
    IVec h = r;
    h.push_back(BigInt(0));
    g.push_back(std::move(h));
  }
  return g;
}

/* Whether the cone (inside a homogenization) reaches positive height, i.e.
 * describes a nonempty polyhedron rather than purely recession data. */
bool has_affine_point(const Cone& c) {
  for (const IVec& g : c.generators())
    if (g.back() != 0) return true;
  return false;
}

bool relint_contains(const Cone& c, const IVec& x) {
  for (const IVec& e : c.equalities())
    if (dot(e, x) != 0) return false;
  for (const IVec& m : c.inequalities())
    if (dot(m, x) <= 0) return false;
  return true;
}

/* Generator index sets of all proper faces: every face of a finitely
 * generated cone is generated by the generators it contains, and the tight
 * sets of single inequalities generate the face lattice under
 * intersection. */
std::vector<std::vector<size_t>> proper_face_generator_sets(const Cone& c) {
  const std::vector<IVec>& gens = c.generators();
  std::set<std::vector<size_t>> pool;
  for (const IVec& m : c.inequalities()) {
    std::vector<size_t> tight;
    for (size_t i = 0; i < gens.size(); ++i)
      if (dot(m, gens[i]) == 0) tight.push_back(i);
    pool.insert(tight);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<size_t>> cur(pool.begin(), pool.end());
    for (size_t a = 0; a < cur.size(); ++a)
      for (size_t b = a + 1; b < cur.size(); ++b) {
        std::vector<size_t> inter;
        std::set_intersection(cur[a].begin(), cur[a].end(), cur[b].begin(),
                              cur[b].end(), std::back_inserter(inter));
        if (pool.insert(inter).second) grew = true;
      }
  }
  return {pool.begin(), pool.end()};
}

}  // namespace

TropicalComplex TropicalComplex::build(size_t ambient_dim,
                                       std::vector<TropicalFace> faces) {
  TropicalComplex C;
  C.ambient_ = ambient_dim;
  C.faces_ = std::move(faces);
  const size_t m = C.faces_.size();

  for (size_t i = 0; i < m; ++i) {
    TropicalFace& f = C.faces_[i];
    if (f.multiplicity < 1)
      fail_validation("SchemaMismatch", "face multiplicity must be positive");
    if (f.vertices.empty())
      fail_validation("SchemaMismatch", "face without vertices");
    for (const QVec& v : f.vertices)
      if (v.size() != ambient_dim)
        fail_validation("SchemaMismatch", "vertex of wrong dimension");
    for (const IVec& r : f.rays) {
      if (r.size() != ambient_dim)
        fail_validation("SchemaMismatch", "ray of wrong dimension");
      bool zero = true;
      for (const BigInt& c : r)
        if (c != 0) zero = false;
      if (zero) fail_validation("SchemaMismatch", "zero ray generator");
    }
    C.hom_.push_back(
        Cone::from_generators(ambient_dim + 1, hom_generators(f)));
    f.dim = C.hom_.back().dim() - 1;
    f.recession_dim = Cone::from_generators(ambient_dim, f.rays).dim();
  }

  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (cone_equal(C.hom_[i], C.hom_[j]))
        fail_validation("SchemaMismatch", "duplicate face");

  {
    std::vector<Cone> rc;
    for (size_t i = 0; i < m; ++i) rc.push_back(C.recession_cone(i));
    if (!cones_form_fan(rc))
      fail_validation("NotAFan", "recession cones do not form a fan");
  }

  C.subfaces_.assign(m, {});
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      Cone inter = intersect_cones(C.hom_[i], C.hom_[j]);
      if (cone_equal(inter, C.hom_[i])) {
        if (!is_face_of(C.hom_[i], C.hom_[j]))
          fail_validation("SchemaMismatch",
                          "face contained in another without being its face");
        C.subfaces_[j].push_back(i);
        continue;
      }
      if (cone_equal(inter, C.hom_[j])) {
        if (!is_face_of(C.hom_[j], C.hom_[i]))
          fail_validation("SchemaMismatch",
                          "face contained in another without being its face");
        C.subfaces_[i].push_back(j);
        continue;
      }
      if (!has_affine_point(inter)) continue;
      if (!is_face_of(inter, C.hom_[i]) || !is_face_of(inter, C.hom_[j]))
        fail_validation("SchemaMismatch", "faces meet outside a common face");
      bool listed = false;
      for (size_t k = 0; k < m && !listed; ++k)
        if (cone_equal(C.hom_[k], inter)) listed = true;
      if (!listed)
        fail_validation("SchemaMismatch",
                        "intersection of two faces missing from the complex");
    }
  }

  for (size_t i = 0; i < m; ++i) {
    for (const std::vector<size_t>& sub :
         proper_face_generator_sets(C.hom_[i])) {
      std::vector<IVec> gens;
      for (size_t g : sub) gens.push_back(C.hom_[i].generators()[g]);
      Cone fc = Cone::from_generators(ambient_dim + 1, std::move(gens));
      if (!has_affine_point(fc)) continue;
      bool listed = false;
      for (size_t k = 0; k < m && !listed; ++k)
        if (cone_equal(C.hom_[k], fc)) listed = true;
      if (!listed)
        fail_validation("SchemaMismatch",
                        "face of a listed face missing from the complex");
    }
  }
  return C;
}

Cone TropicalComplex::recession_cone(size_t i) const {
  return Cone::from_generators(ambient_, faces_[i].rays);
}

std::vector<Cone> TropicalComplex::recession_fan() const {
  std::vector<Cone> out;
  for (size_t i = 0; i < faces_.size(); ++i) {
    Cone c = recession_cone(i);
    bool seen = false;
    for (const Cone& o : out)
      if (cone_equal(o, c)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(std::move(c));
  }
  return out;
}

bool TropicalComplex::recession_fan_unimodular() const {
  for (const Cone& c : recession_fan())
    if (!simplicial_unimodular(c)) return false;
  return true;
}

namespace {

void require_reduced(const TropicalFace& f) {
  if (f.multiplicity != 1)
    fail_validation("MultiplicityUnsupported",
                    "class sums require multiplicity 1 on every face");
}

}  // namespace

LaurentBivarPoly tropical_motivic_fiber(const TropicalComplex& C) {
  const LaurentBivarPoly shrink =
      LaurentBivarPoly(1) - LaurentBivarPoly::monomial(1, 1, BigInt(1));
  LaurentBivarPoly sum;
  for (const TropicalFace& f : C.faces()) {
    require_reduced(f);
    if (!f.eclass)
      fail_validation("MissingLabel", "face without an E-class label");
    sum += *f.eclass * shrink.pow(f.dim - f.recession_dim);
  }
  return sum;
}

UnivarPoly matroidal_fiber(const TropicalComplex& C) {
  const UnivarPoly shrink = UnivarPoly(1) - UnivarPoly::var();
  UnivarPoly sum;
  for (const TropicalFace& f : C.faces()) {
    require_reduced(f);
    if (!f.matroid)
      fail_validation("MissingLabel", "face without a matroid label");
    sum += f.matroid->complement_class() * shrink.pow(f.dim - f.recession_dim);
  }
  return sum;
}

BigInt matroidal_euler(const TropicalComplex& C) {
  BigInt total(0);
  for (const TropicalFace& f : C.faces()) {
    require_reduced(f);
    if (!f.matroid)
      fail_validation("MissingLabel", "face without a matroid label");
    if (f.dim != f.recession_dim) continue;
    UnivarPoly chi = f.matroid->reduced_char_poly();
    total += chi.eval_int(1) + chi.derivative().eval_int(1);
  }
  return total;
}

std::vector<std::string> consistency_warnings(const TropicalComplex& C) {
  std::vector<std::string> out;
  for (size_t i = 0; i < C.faces().size(); ++i) {
    const TropicalFace& f = C.faces()[i];
    if (f.dim != 0 || !f.matroid) continue;
    size_t adjacent = 0;
    for (size_t j = 0; j < C.faces().size(); ++j) {
      if (C.faces()[j].dim != 1 || C.faces()[j].recession_dim != 1) continue;
      const std::vector<size_t>& subs = C.proper_faces_of(j);
      if (std::find(subs.begin(), subs.end(), i) != subs.end()) ++adjacent;
    }
    size_t expected = bergman_fan(*f.matroid).rays.size();
    if (adjacent != expected) {
      std::ostringstream os;
      os << "vertex face " << i << " has " << adjacent
         << " adjacent unbounded edges but its matroid label has " << expected
         << " Bergman rays";
      out.push_back(os.str());
    }
  }
  return out;
}

CurveReport curve_graph_fiber(const std::vector<long>& degrees,
                              const std::vector<std::pair<size_t, size_t>>& edges,
                              long legs) {
  if (degrees.empty())
    fail_validation("SchemaMismatch", "curve needs at least one vertex");
  if (legs < 0) fail_validation("SchemaMismatch", "negative leg count");
  for (long d : degrees)
    if (d < 3)
      fail_validation("SchemaMismatch", "vertex of degree below three");
  const long V = long(degrees.size());
  const long B = long(edges.size());
  std::vector<long> ends(degrees.size(), 0);
  for (const auto& [a, b] : edges) {
    if (a >= degrees.size() || b >= degrees.size())
      fail_validation("SchemaMismatch", "edge endpoint out of range");
    ++ends[a];
    ++ends[b];
  }
  for (size_t v = 0; v < degrees.size(); ++v)
    if (ends[v] > degrees[v])
      fail_validation("InconsistentGraph",
                      "vertex has more edge ends than its degree");

  const UnivarPoly L = UnivarPoly::var();
  UnivarPoly vertex_sum;
  for (long d : degrees) vertex_sum += L + UnivarPoly(1 - d);
  UnivarPoly lhs =
      vertex_sum + (UnivarPoly(1) - L) * UnivarPoly(B) + UnivarPoly(legs);
  UnivarPoly rhs = (L + UnivarPoly(1)) * UnivarPoly(V - B);
  if (!(lhs == rhs))
    fail_validation("InconsistentGraph",
                    "vertex degrees, edges and legs disagree");

  std::vector<size_t> parent(degrees.size());
  std::iota(parent.begin(), parent.end(), size_t(0));
  std::function<size_t(size_t)> find = [&](size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& [a, b] : edges) parent[find(a)] = find(b);
  long components = 0;
  for (size_t v = 0; v < parent.size(); ++v)
    if (find(v) == v) ++components;

  CurveReport r;
  r.psi = lhs;
  r.euler = lhs.eval_int(1);
  r.genus = B - V + components;
  return r;
}

CurveReport curve_graph_fiber_counts(long vertices, long bounded_edges,
                                     long legs) {
  if (vertices < 1 || bounded_edges < 0 || legs < 0)
    fail_validation("SchemaMismatch", "curve counts out of range");
  CurveReport r;
  r.psi = (UnivarPoly::var() + UnivarPoly(1)) *
          UnivarPoly(vertices - bounded_edges);
  r.euler = r.psi.eval_int(1);
  r.genus = bounded_edges - vertices + 1;
  return r;
}

TropicalComplex stellar_refine(const TropicalComplex& C, const QVec& point) {
  if (point.size() != C.ambient_dim())
    fail_validation("SchemaMismatch", "split point of wrong dimension");
  const IVec xh = homogenize_vertex(point);
  long f0 = -1;
  for (size_t i = 0; i < C.faces().size(); ++i)
    if (relint_contains(C.hom_cone(i), xh)) {
      f0 = long(i);
      break;
    }
  if (f0 < 0)
    fail_validation("NotContained", "split point outside the complex support");
  if (C.faces()[size_t(f0)].dim == 0)
    fail_validation("DegenerateInput", "split point is already a vertex");
  for (const TropicalFace& f : C.faces())
    if (!f.eclass)
      fail_validation("MissingLabel", "refinement needs E-class labels");

  std::vector<char> is_host(C.faces().size(), 0);
  std::vector<size_t> hosts;
  for (size_t i = 0; i < C.faces().size(); ++i) {
    const std::vector<size_t>& subs = C.proper_faces_of(i);
    if (i == size_t(f0) ||
        std::find(subs.begin(), subs.end(), size_t(f0)) != subs.end()) {
      is_host[i] = 1;
      hosts.push_back(i);
    }
  }

  auto canonical_rays = [&C](const std::vector<IVec>& rays) {
    std::vector<IVec> out;
    if (rays.empty()) return out;
    Cone rc = Cone::from_generators(C.ambient_dim(), rays);
    if (rc.pointed()) return rc.extreme_rays();
    for (const IVec& r : rays) out.push_back(primitive(r));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  std::set<std::pair<std::vector<QVec>, std::vector<IVec>>> cells;
  auto add_cell = [&cells](std::vector<QVec> verts, std::vector<IVec> rays) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    cells.insert({std::move(verts), std::move(rays)});
  };
  add_cell({point}, {});
  for (size_t g : hosts) {
    for (size_t h : C.proper_faces_of(g)) {
      if (is_host[h]) continue;
      const TropicalFace& fh = C.faces()[h];
      std::vector<QVec> verts = fh.vertices;
      verts.push_back(point);
      add_cell(std::move(verts), canonical_rays(fh.rays));
    }
    std::vector<size_t> around = C.proper_faces_of(g);
    around.push_back(g);
    for (size_t h : around) {
      const TropicalFace& fh = C.faces()[h];
      if (fh.rays.empty()) continue;
      add_cell({point}, canonical_rays(fh.rays));
    }
  }

  std::vector<TropicalFace> out;
  for (size_t i = 0; i < C.faces().size(); ++i)
    if (!is_host[i]) out.push_back(C.faces()[i]);
  const LaurentBivarPoly pull =
      LaurentBivarPoly::monomial(1, 1, BigInt(1)) - LaurentBivarPoly(1);
  for (const auto& [verts, rays] : cells) {
    TropicalFace nf;
    nf.vertices = verts;
    nf.rays = rays;
    Cone hc = Cone::from_generators(C.ambient_dim() + 1, hom_generators(nf));
    const long cell_dim = hc.dim() - 1;
    long best = -1;
    long best_dim = 0;
    for (size_t g : hosts) {
      bool inside = true;
      for (const IVec& gen : hc.generators())
        if (!C.hom_cone(g).contains(gen)) {
          inside = false;
          break;
        }
      if (inside && (best < 0 || C.faces()[g].dim < best_dim)) {
        best = long(g);
        best_dim = C.faces()[g].dim;
      }
    }
    if (best < 0) throw std::logic_error("stellar cell without a carrier");
    nf.eclass =
        *C.faces()[size_t(best)].eclass * pull.pow(best_dim - cell_dim);
    out.push_back(std::move(nf));
  }
  return TropicalComplex::build(C.ambient_dim(), std::move(out));
}

RefineOutcome refine_and_check(const TropicalComplex& C, const Refinement& r) {
  RefineOutcome out;
  out.psi_before = tropical_motivic_fiber(C);
  TropicalComplex refined;
  if (r.drop_face) {
    if (*r.drop_face >= C.faces().size())
      fail_validation("UnknownElement", "no face with the given index");
    std::vector<TropicalFace> fl;
    for (size_t i = 0; i < C.faces().size(); ++i)
      if (i != *r.drop_face) fl.push_back(C.faces()[i]);
    refined = TropicalComplex::build(C.ambient_dim(), std::move(fl));
  } else if (r.split_point) {
    refined = stellar_refine(C, *r.split_point);
  } else {
    fail_validation("SchemaMismatch", "empty refinement description");
  }

  std::vector<Cone> before = C.recession_fan();
  std::vector<Cone> after = refined.recession_fan();
  auto covered = [](const std::vector<Cone>& a, const std::vector<Cone>& b) {
    for (const Cone& x : a) {
      bool found = false;
      for (const Cone& y : b)
        if (cone_equal(x, y)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };
  if (!covered(before, after) || !covered(after, before))
    fail_validation("RecessionFanChanged",
                    "refinement altered the recession fan");
  out.psi_after = tropical_motivic_fiber(refined);
  out.equal = out.psi_before == out.psi_after;
  return out;
}

TropicalComplex dual_complex(const Subdivision& S) {
  const LatticePolytope& P = S.parent;
  const long D = P.dim();
  if (D < 1)
    fail_validation("DegenerateInput",
                    "dual complex needs a parent of dimension >= 1");
  const std::vector<PolytopeFacet>& facets = P.facets();
  std::vector<TropicalFace> faces;
  for (size_t c = 0; c < S.cells.size(); ++c) {
    const SubdivisionCell& cell = S.cells[c];
    if (cell.dim < 1) continue;
    TropicalFace f;
    for (size_t k = 0; k < S.maximal.size(); ++k) {
      const std::vector<size_t>& mpts = S.cells[S.maximal[k]].point_indices;
      if (std::includes(mpts.begin(), mpts.end(), cell.point_indices.begin(),
                        cell.point_indices.end())) {
        QVec w(S.max_slopes[k].size());
        for (size_t t = 0; t < w.size(); ++t) w[t] = -S.max_slopes[k][t];
        f.vertices.push_back(std::move(w));
      }
    }
    for (const PolytopeFacet& fc : facets)
      if (std::includes(fc.tight.begin(), fc.tight.end(),
                        cell.point_indices.begin(), cell.point_indices.end()))
        f.rays.push_back(fc.normal);
    f.eclass = bb_epoly(S.cell_polytope(c));
    faces.push_back(std::move(f));
  }
  return TropicalComplex::build(size_t(D), std::move(faces));
}

namespace {

/* Point-index sets of the proper faces of the parent polytope that appear
 * as cells of the subdivision; the empty face (empty set) always
 * qualifies. */
std::vector<std::vector<size_t>> valid_sigma_sets(const Subdivision& S) {
  if (S.parent.points().size() != S.points.size())
    throw std::logic_error("subdivision point table out of step with parent");
  std::vector<std::vector<size_t>> out;
  out.push_back({});
  const FaceLattice& fl = S.parent.face_lattice();
  for (size_t fi = 0; fi < fl.faces.size(); ++fi) {
    if (fi == fl.full_index || fi == fl.empty_index) continue;
    const std::vector<size_t>& T = fl.faces[fi].point_indices;
    bool is_cell = true;
    try {
      S.cell_index_of(T);
    } catch (const ValidationError&) {
      is_cell = false;
    }
    if (is_cell) out.push_back(T);
  }
  return out;
}

}  // namespace

BigInt mobius_cell_identity(const Subdivision& S,
                            const std::vector<size_t>& sigma,
                            const std::vector<size_t>& sigma_prime) {
  std::vector<size_t> sg = sigma;
  std::sort(sg.begin(), sg.end());
  std::vector<size_t> sp = sigma_prime;
  std::sort(sp.begin(), sp.end());

  std::vector<std::vector<size_t>> valid = valid_sigma_sets(S);
  if (std::find(valid.begin(), valid.end(), sg) == valid.end())
    fail_validation("UnknownElement",
                    "sigma is not a boundary face appearing as a cell");
  if (!sp.empty()) {
    if (sg.empty() ||
        !std::includes(sg.begin(), sg.end(), sp.begin(), sp.end()))
      fail_validation("UnknownElement", "sigma_prime is not a face of sigma");
    bool is_cell = true;
    try {
      S.cell_index_of(sp);
    } catch (const ValidationError&) {
      is_cell = false;
    }
    if (!is_cell)
      fail_validation("UnknownElement", "sigma_prime is not a cell");
  }

  BigInt sum(0);
  for (const SubdivisionCell& tau : S.cells) {
    if (tau.interiority != 0) continue;
    std::vector<size_t> inter;
    std::set_intersection(tau.point_indices.begin(), tau.point_indices.end(),
                          sg.begin(), sg.end(), std::back_inserter(inter));
    if (inter == sp) sum += (tau.dim % 2 == 0) ? 1 : -1;
  }
  return sum;
}

MobiusCheck mobius_cell_identity_exhaustive(const Subdivision& S) {
  MobiusCheck res;
  res.pass = true;
  const BigInt top = (S.parent.dim() % 2 == 0) ? BigInt(1) : BigInt(-1);
  for (const std::vector<size_t>& sg : valid_sigma_sets(S)) {
    std::vector<std::vector<size_t>> primes;
    primes.push_back({});
    if (!sg.empty())
      for (const SubdivisionCell& c : S.cells)
        if (std::includes(sg.begin(), sg.end(), c.point_indices.begin(),
                          c.point_indices.end()))
          primes.push_back(c.point_indices);
    for (const std::vector<size_t>& sp : primes) {
      BigInt got = mobius_cell_identity(S, sg, sp);
      BigInt want = (sp == sg) ? top : BigInt(0);
      if (got != want) res.pass = false;
      ++res.cases;
    }
  }
  return res;
}

}  // namespace trop
