/*
 * Rational polyhedral cones in Z^n, exact throughout.
 *
 * A cone is built from integer generators.  Construction derives, via a
 * double-description sweep, an ambient halfspace description (equalities
 * cutting out the span plus inequalities) and from it the extreme rays and
 * pointedness.  Cones of any dimension, pointed or not, are supported; the
 * zero cone has no generators.
 */
#pragma once

#include <vector>

#include "trop/numeric.hpp"

namespace trop {

/* Generators of { x : <e,x> = 0 for e in eqs, <m,x> >= 0 for m in ineqs }
 * as a lineality basis plus rays (possibly redundant). */
struct GeneratorPair {
  std::vector<IVec> lineality;
  std::vector<IVec> rays;
};
GeneratorPair dual_description(size_t ambient, const std::vector<IVec>& eqs,
                               const std::vector<IVec>& ineqs);

class Cone {
 public:
  static Cone from_generators(size_t ambient, std::vector<IVec> gens);

  size_t ambient() const { return ambient_; }
  long dim() const { return dim_; }
  const std::vector<IVec>& generators() const { return gens_; }
  /* <e,x> = 0 on the cone; a basis of the orthogonal complement of the span. */
  const std::vector<IVec>& equalities() const { return eq_; }
  /* <m,x> >= 0 on the cone. */
  const std::vector<IVec>& inequalities() const { return ineq_; }
  bool pointed() const { return pointed_; }
  /* Primitive extreme rays, sorted; empty unless the cone is pointed. */
  const std::vector<IVec>& extreme_rays() const { return extreme_; }
  bool contains(const IVec& v) const;

 private:
  size_t ambient_ = 0;
  long dim_ = 0;
  bool pointed_ = true;
  std::vector<IVec> gens_, eq_, ineq_, extreme_;
};

bool cone_equal(const Cone& a, const Cone& b);
Cone intersect_cones(const Cone& a, const Cone& b);

/* Whether `face` is a face of `cone`: the zero cone, `cone` itself, or any
 * intersection with a supporting hyperplane. */
bool is_face_of(const Cone& face, const Cone& cone);

/* Pairwise intersections are common faces (cones equal as sets are treated
 * as one member). */
bool cones_form_fan(const std::vector<Cone>& cones);

/* Pointed, spanned by exactly dim() extreme rays whose primitive matrix has
 * coprime maximal minors.  The zero cone qualifies. */
bool simplicial_unimodular(const Cone& c);

}  // namespace trop
