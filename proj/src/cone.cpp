#include "trop/cone.hpp"

#include <algorithm>
#include <set>

#include "trop/error.hpp"
#include "trop/linalg.hpp"

namespace trop {

namespace {

bool is_zero(const IVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

void dedupe_primitive(std::vector<IVec>& vecs) {
  for (auto& v : vecs) v = primitive(std::move(v));
  std::sort(vecs.begin(), vecs.end());
  vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
  vecs.erase(std::remove_if(vecs.begin(), vecs.end(), is_zero), vecs.end());
}

/* x -> <m,l> x - <m,x> l, which kills the m-component; the x-coefficient is
 * positive when m was oriented so that <m,l> > 0. */
IVec project_along(const IVec& x, const IVec& l, const BigInt& ml,
                   const BigInt& mx) {
  IVec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = ml * x[i] - mx * l[i];
  return primitive(std::move(out));
}

void process_constraint(const IVec& m, bool equality, std::vector<IVec>& lin,
                        std::vector<IVec>& rays) {
  size_t pivot = lin.size();
  for (size_t i = 0; i < lin.size(); ++i)
    if (dot(m, lin[i]) != 0) { pivot = i; break; }
  if (pivot != lin.size()) {
    IVec l = lin[pivot];
    if (dot(m, l) < 0)
      for (auto& x : l) x = -x;
    const BigInt ml = dot(m, l);
    std::vector<IVec> new_lin;
    for (size_t i = 0; i < lin.size(); ++i) {
      if (i == pivot) continue;
      new_lin.push_back(project_along(lin[i], l, ml, dot(m, lin[i])));
    }
    std::vector<IVec> new_rays;
    for (const IVec& r : rays)
      new_rays.push_back(project_along(r, l, ml, dot(m, r)));
    if (!equality) new_rays.push_back(l);
    lin = std::move(new_lin);
    rays = std::move(new_rays);
  } else {
    std::vector<IVec> pos, zero, neg;
    std::vector<BigInt> dpos, dneg;
    for (const IVec& r : rays) {
      BigInt d = dot(m, r);
      if (d > 0) { pos.push_back(r); dpos.push_back(d); }
      else if (d < 0) { neg.push_back(r); dneg.push_back(d); }
      else zero.push_back(r);
    }
    std::vector<IVec> new_rays = zero;
    if (!equality)
      for (const IVec& r : pos) new_rays.push_back(r);
    for (size_t i = 0; i < pos.size(); ++i)
      for (size_t j = 0; j < neg.size(); ++j) {
        IVec w(m.size());
        for (size_t k = 0; k < m.size(); ++k)
          w[k] = dpos[i] * neg[j][k] - dneg[j] * pos[i][k];
        w = primitive(std::move(w));
        if (!is_zero(w)) new_rays.push_back(std::move(w));
      }
    rays = std::move(new_rays);
  }
  dedupe_primitive(rays);
}

}  // namespace

GeneratorPair dual_description(size_t ambient, const std::vector<IVec>& eqs,
                               const std::vector<IVec>& ineqs) {
  GeneratorPair out;
  for (size_t i = 0; i < ambient; ++i) {
    IVec e(ambient, BigInt(0));
    e[i] = 1;
    out.lineality.push_back(std::move(e));
  }
  for (const IVec& m : eqs) {
    if (m.size() != ambient) fail_validation("SchemaMismatch", "bad constraint length");
    if (!is_zero(m)) process_constraint(m, true, out.lineality, out.rays);
  }
  for (const IVec& m : ineqs) {
    if (m.size() != ambient) fail_validation("SchemaMismatch", "bad constraint length");
    if (!is_zero(m)) process_constraint(m, false, out.lineality, out.rays);
  }
  return out;
}

Cone Cone::from_generators(size_t ambient, std::vector<IVec> gens) {
  for (const IVec& g : gens)
    if (g.size() != ambient)
      fail_validation("SchemaMismatch", "generator of wrong dimension");
  dedupe_primitive(gens);

  Cone c;
  c.ambient_ = ambient;
  c.gens_ = gens;

  /* Halfspace description from the dual cone { y : <g,y> >= 0 for all g }:
   * its lineality cuts out the span of the cone, its rays are the valid
   * inequalities. */
  GeneratorPair dual = dual_description(ambient, {}, gens);
  c.eq_ = dual.lineality;
  c.ineq_ = dual.rays;
  dedupe_primitive(c.eq_);
  dedupe_primitive(c.ineq_);
  c.dim_ = long(ambient) - long(c.eq_.size());

  GeneratorPair primal = dual_description(ambient, c.eq_, c.ineq_);
  c.pointed_ = primal.lineality.empty();
  if (c.pointed_) {
    for (const IVec& r : primal.rays) {
      IMat tight = c.eq_;
      for (const IVec& m : c.ineq_)
        if (dot(m, r) == 0) tight.push_back(m);
      if (rank_of_int(tight) == long(ambient) - 1)
        c.extreme_.push_back(primitive(r));
    }
    dedupe_primitive(c.extreme_);
  }
  for (const IVec& g : gens)
    if (!c.contains(g))
      throw std::logic_error("cone conversion inconsistency");
  return c;
}

bool Cone::contains(const IVec& v) const {
  if (v.size() != ambient_)
    fail_validation("SchemaMismatch", "vector of wrong dimension");
  for (const IVec& e : eq_)
    if (dot(e, v) != 0) return false;
  for (const IVec& m : ineq_)
    if (dot(m, v) < 0) return false;
  return true;
}

bool cone_equal(const Cone& a, const Cone& b) {
  if (a.ambient() != b.ambient()) return false;
  for (const IVec& g : a.generators())
    if (!b.contains(g)) return false;
  for (const IVec& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

Cone intersect_cones(const Cone& a, const Cone& b) {
  if (a.ambient() != b.ambient())
    fail_validation("SchemaMismatch", "ambient dimensions differ");
  std::vector<IVec> eqs = a.equalities();
  eqs.insert(eqs.end(), b.equalities().begin(), b.equalities().end());
  std::vector<IVec> ineqs = a.inequalities();
  ineqs.insert(ineqs.end(), b.inequalities().begin(), b.inequalities().end());
  GeneratorPair gp = dual_description(a.ambient(), eqs, ineqs);
  std::vector<IVec> gens = gp.rays;
  for (const IVec& l : gp.lineality) {
    gens.push_back(l);
    IVec neg(l.size());
    for (size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
    gens.push_back(std::move(neg));
  }
  return Cone::from_generators(a.ambient(), std::move(gens));
}

bool is_face_of(const Cone& face, const Cone& cone) {
  if (face.ambient() != cone.ambient()) return false;
  for (const IVec& g : face.generators())
    if (!cone.contains(g)) return false;
  /* Supporting normals vanishing on the candidate carve out the smallest
   * face of `cone` containing it; they must carve out exactly the candidate. */
  std::vector<IVec> tight;
  for (const IVec& m : cone.inequalities()) {
    bool vanishes = true;
    for (const IVec& g : face.generators())
      if (dot(m, g) != 0) { vanishes = false; break; }
    if (vanishes) tight.push_back(m);
  }
  for (const IVec& g : cone.generators()) {
    bool on_face = true;
    for (const IVec& m : tight)
      if (dot(m, g) != 0) { on_face = false; break; }
    if (on_face && !face.contains(g)) return false;
  }
  return true;
}

bool cones_form_fan(const std::vector<Cone>& cones) {
  std::vector<const Cone*> distinct;
  for (const Cone& c : cones) {
    bool dup = false;
    for (const Cone* d : distinct)
      if (cone_equal(*d, c)) { dup = true; break; }
    if (!dup) distinct.push_back(&c);
  }
  for (size_t i = 0; i < distinct.size(); ++i)
    for (size_t j = i + 1; j < distinct.size(); ++j) {
      Cone meet = intersect_cones(*distinct[i], *distinct[j]);
      if (!is_face_of(meet, *distinct[i]) || !is_face_of(meet, *distinct[j]))
        return false;
    }
  return true;
}

bool simplicial_unimodular(const Cone& c) {
  if (!c.pointed()) return false;
  const std::vector<IVec>& rays = c.extreme_rays();
  if (long(rays.size()) != c.dim()) return false;
  if (rays.empty()) return true;  // the zero cone
  return gcd_maximal_minors(rays) == 1;
}

}  // namespace trop
