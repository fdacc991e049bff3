/*
 * Polyhedral complexes with recession data and per-face class labels.
 *
 * A face is conv(vertices) + cone(rays) with rational vertices and integer
 * ray generators; a complex is a face list that is closed under taking
 * faces, intersects pairwise in common faces, and whose recession cones
 * form a fan.  On top of the validated structure the module assembles the
 * weighted class sum over faces (the degeneration invariant of the
 * complex), its matroid-labelled variant, abstract tropical curve counts,
 * stellar refinements with label pullback, the dual complex of a regular
 * subdivision, and a signed cell-counting identity used as a test oracle.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trop/cone.hpp"
#include "trop/matroid.hpp"
#include "trop/polynomial.hpp"
#include "trop/subdivision.hpp"

namespace trop {

struct TropicalFace {
  std::vector<QVec> vertices;
  std::vector<IVec> rays;
  long multiplicity = 1;
  std::optional<LaurentBivarPoly> eclass;
  std::optional<Matroid> matroid;

  long dim = -1;            // derived during validation
  long recession_dim = -1;  // derived during validation
};

class TropicalComplex {
 public:
  /* Validates the complex: face schema and duplicates (SchemaMismatch),
   * recession cones forming a fan (NotAFan), then pairwise intersections
   * being common faces and closure under taking faces (SchemaMismatch). */
  static TropicalComplex build(size_t ambient_dim,
                               std::vector<TropicalFace> faces);

  size_t ambient_dim() const { return ambient_; }
  const std::vector<TropicalFace>& faces() const { return faces_; }
  /* Cone over face i placed at height 1 (rays at height 0) in R^(n+1). */
  const Cone& hom_cone(size_t i) const { return hom_[i]; }
  Cone recession_cone(size_t i) const;
  /* Distinct recession cones of all faces; closed under taking faces. */
  std::vector<Cone> recession_fan() const;
  bool recession_fan_unimodular() const;
  /* Indices of the proper faces of face i present in the list. */
  const std::vector<size_t>& proper_faces_of(size_t i) const {
    return subfaces_[i];
  }

 private:
  size_t ambient_ = 0;
  std::vector<TropicalFace> faces_;
  std::vector<Cone> hom_;
  std::vector<std::vector<size_t>> subfaces_;
};

/* Sum over faces of eclass * (1-uv)^(dim - recession_dim).  Every face must
 * carry an E-class label (MissingLabel) and multiplicity 1
 * (MultiplicityUnsupported). */
LaurentBivarPoly tropical_motivic_fiber(const TropicalComplex& C);

/* Matroid-labelled variant in Z[L]: sum over faces of
 * complement_class(M_F) * (1-L)^(dim - recession_dim). */
UnivarPoly matroidal_fiber(const TropicalComplex& C);

/* Euler characteristic of the generic fiber of a matroid-labelled complex:
 * sum of chi(1) + chi'(1) over the faces with dim == recession_dim. */
BigInt matroidal_euler(const TropicalComplex& C);

/* Advisory label screening: a vertex whose matroid label's Bergman fan has
 * a different ray count than the vertex's adjacent unbounded edges is
 * reported.  May miss genuine mismatches; never errors. */
std::vector<std::string> consistency_warnings(const TropicalComplex& C);

struct CurveReport {
  UnivarPoly psi;
  BigInt euler{0};
  long genus = 0;
};

/* Abstract tropical curve: per-vertex degrees (each >= 3), bounded edges
 * as vertex pairs (multi-edges allowed), and a number of unbounded legs.
 * psi is computed once vertex-by-vertex and once as (L+1)(V-B); a mismatch
 * (equivalently, a degree/edge/leg count inconsistency) raises
 * InconsistentGraph. */
CurveReport curve_graph_fiber(const std::vector<long>& degrees,
                              const std::vector<std::pair<size_t, size_t>>& edges,
                              long legs);
/* Counts-only form; the graph is assumed connected. */
CurveReport curve_graph_fiber_counts(long vertices, long bounded_edges,
                                     long legs);

/* Stellar refinement at a point in the relative interior of a
 * positive-dimensional face: every face containing it is replaced by the
 * joins of the point with the non-containing subfaces (recession parts
 * included), and labels are pulled back with the (uv-1)^codim rule.
 * NotContained if the point misses the support, DegenerateInput if it is
 * an existing vertex, MissingLabel without E-class labels. */
TropicalComplex stellar_refine(const TropicalComplex& C, const QVec& point);

struct Refinement {
  std::optional<QVec> split_point;  // stellar refinement at this point
  std::optional<size_t> drop_face;  // deliberate support edit (negative control)
};

struct RefineOutcome {
  bool equal = false;
  LaurentBivarPoly psi_before, psi_after;
};

/* Applies the described edit, verifies the recession fan is unchanged
 * (RecessionFanChanged otherwise), and compares the class sums. */
RefineOutcome refine_and_check(const TropicalComplex& C, const Refinement& r);

/* Dual complex of a regular subdivision: one face per cell of dimension
 * >= 1, positioned at the negated slopes of the containing maximal cells,
 * with recession rays the inner normals of the parent facets containing
 * the cell, labelled by the cell's hypersurface E-polynomial. */
TropicalComplex dual_complex(const Subdivision& S);

/* Signed count of interior cells tau with tau /\ sigma == sigma_prime,
 * weighted by (-1)^dim tau.  sigma must be a proper face of the parent
 * polytope that is itself a cell (the empty vector denotes the empty
 * face), sigma_prime a face of sigma; UnknownElement otherwise.  Equals
 * (-1)^dim P exactly when sigma_prime == sigma, and 0 otherwise. */
BigInt mobius_cell_identity(const Subdivision& S,
                            const std::vector<size_t>& sigma,
                            const std::vector<size_t>& sigma_prime);

struct MobiusCheck {
  long cases = 0;
  bool pass = false;
};

/* Runs mobius_cell_identity over every valid (sigma, sigma_prime) pair and
 * checks the dichotomy. */
MobiusCheck mobius_cell_identity_exhaustive(const Subdivision& S);

}  // namespace trop
