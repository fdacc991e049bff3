/*
 * Lattice polytopes with exact rational/integer arithmetic: facet enumeration,
 * face lattices, lattice-point enumeration, normalized volumes, Ehrhart
 * h*-polynomials, and the face-number h-vector.
 *
 * A polytope is conv(points) for an explicit list of integer points in Z^n.
 * All metric computations happen in a chart for the affine lattice
 * aff(P) cap Z^n: a base point plus a saturated basis of the direction
 * lattice.  This makes every face full-dimensional in its own chart and makes
 * volumes/Ehrhart counts come out with respect to the ambient lattice, which
 * is what the downstream Hodge-theoretic formulas require.
 *
 * Everything here is brute force over small index sets; the ambient dimension
 * is capped (default 6) and inputs are desk-scale.
 */
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "trop/linalg.hpp"
#include "trop/polynomial.hpp"
#include "trop/poset.hpp"

namespace trop {

struct PolytopeFacet {
  IVec normal;               // primitive, chart coordinates; <normal,y> >= offset on P
  BigInt offset;
  std::vector<size_t> tight; // indices of points lying on the facet, sorted
};

struct PolytopeFace {
  std::vector<size_t> point_indices;  // sorted; empty for the empty face
  std::vector<size_t> tight_facets;   // facets containing the face (all, for the empty face)
  long dim;                           // -1 for the empty face
};

struct FaceLattice {
  std::vector<PolytopeFace> faces;  // sorted by (dim, point_indices); faces[0] is empty
  size_t empty_index = 0;
  size_t full_index = 0;
  FinitePoset poset;                // same indexing as faces; order = inclusion

  std::vector<size_t> indices_of_dim(long d) const;
};

class LatticePolytope {
public:
  static constexpr long kDefaultDimCap = 6;

  LatticePolytope() = default;

  /* Deduplicates points; DegenerateInput on an empty list, SchemaMismatch on
   * ragged coordinates, DimensionTooLarge when ambient dim exceeds the cap. */
  static LatticePolytope from_points(const std::vector<IVec>& pts,
                                     long dim_cap = kDefaultDimCap);
  static LatticePolytope empty_polytope(long ambient_dim);

  bool is_empty() const { return points_.empty(); }
  long ambient_dim() const { return ambient_dim_; }
  long dim() const { return dim_; }  // -1 for the empty polytope

  const std::vector<IVec>& points() const { return points_; }
  const IVec& base_point() const { return base_; }
  const IMat& chart_basis() const { return chart_; }  // dim() rows

  /* Chart coordinates of an ambient lattice point of aff(P) cap Z^n;
   * NotContained if the point is not in that affine lattice. */
  IVec chart_coords(const IVec& ambient_point) const;
  IVec ambient_coords(const IVec& chart_point) const;

  const std::vector<PolytopeFacet>& facets() const;  // empty list when dim <= 0
  bool contains(const IVec& ambient_point) const;

  std::vector<size_t> vertex_indices() const;
  std::vector<IVec> vertices() const;

  std::vector<IVec> lattice_points() const;
  std::vector<IVec> interior_lattice_points() const;  // relative interior

  /* (dim)! times the volume in the affine lattice; 1 for a point. */
  BigInt normalized_volume() const;

  /* h*-numerator of the Ehrhart series; 1 for the empty polytope.
   * NonNegativityViolation if a coefficient comes out negative. */
  UnivarPoly ehrhart_hstar() const;

  /* Face-number h-vector: sum over nonempty faces Q of
   * t^(dim P - dim Q) (1-t)^(dim Q). */
  UnivarPoly h_vector() const;

  const FaceLattice& face_lattice() const;

  /* Sub-polytope spanned by a face's points (empty face gives the empty
   * polytope). */
  LatticePolytope face_polytope(const PolytopeFace& f) const;

private:
  std::vector<IVec> chart_points() const;
  void ensure_facets() const;

  long ambient_dim_ = 0;
  long dim_ = -1;
  std::vector<IVec> points_;
  IVec base_;
  IMat chart_;  // saturated basis of the direction lattice, dim_ rows
  long dim_cap_ = kDefaultDimCap;

  mutable std::optional<std::vector<PolytopeFacet>> facets_;
  mutable std::shared_ptr<const FaceLattice> face_lattice_;
};

/* Codimension in `parent` of the smallest parent-face whose relative interior
 * contains the cell's relative interior.  NotContained if cell is not inside
 * parent. */
long interiority_class(const LatticePolytope& cell, const LatticePolytope& parent);

}  // namespace trop
