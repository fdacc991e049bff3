/*
 * Regular (coherent) subdivisions of lattice polytopes.
 *
 * A lifting function assigns an integer height to each input point; the
 * projections of the lower faces of the lifted point configuration tile the
 * polytope.  Cells are identified by the set of input points lying on them
 * (only points whose lift touches the lower envelope participate).
 */
#pragma once

#include "trop/polytope.hpp"

namespace trop {

/* One cell of the subdivision.  `interiority` is the codimension in the
 * parent polytope of the smallest parent face containing the cell; interior
 * cells have interiority 0. */
struct SubdivisionCell {
  std::vector<size_t> point_indices;  // sorted indices into Subdivision::points
  long dim = 0;
  long interiority = 0;
};

struct Subdivision {
  LatticePolytope parent;
  std::vector<IVec> points;   // deduplicated input points
  std::vector<BigInt> lifts;  // parallel to `points`
  std::vector<SubdivisionCell> cells;  // all nonempty cells, by (dim, points)
  std::vector<size_t> maximal;         // indices into `cells`, top dimension

  /* For each maximal cell, the affine function <slope, y> + offset (chart
   * coordinates of the parent) that matches the lift on the cell and stays
   * <= the lift everywhere; aligned with `maximal`. */
  std::vector<QVec> max_slopes;
  std::vector<BigRat> max_offsets;

  std::vector<size_t> indices_of_dim(long d) const;
  LatticePolytope cell_polytope(size_t cell_index) const;
  /* Index into `cells` of the cell with exactly this point set; throws
   * UnknownElement if absent. */
  size_t cell_index_of(const std::vector<size_t>& point_indices) const;
};

/* Subdivision of conv(points) induced by the lifts (sizes must match).
 * Duplicate points are merged, keeping the lowest lift.  A zero lift yields
 * the trivial subdivision whose cells are the faces of the polytope. */
Subdivision regular_subdivision(const std::vector<IVec>& points,
                                const std::vector<BigInt>& lifts,
                                long dim_cap = LatticePolytope::kDefaultDimCap);

}  // namespace trop
