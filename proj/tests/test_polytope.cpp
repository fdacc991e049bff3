#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "trop/error.hpp"
#include "trop/polytope.hpp"

using namespace trop;

namespace {

LatticePolytope triangle3() {
  return LatticePolytope::from_points({{0, 0}, {3, 0}, {0, 3}});
}

LatticePolytope simplex(long scale, long dim) {
  std::vector<IVec> pts;
  pts.push_back(IVec(size_t(dim), 0));
  for (long i = 0; i < dim; ++i) {
    IVec e(size_t(dim), 0);
    e[size_t(i)] = scale;
    pts.push_back(e);
  }
  return LatticePolytope::from_points(pts);
}

}  // namespace

TEST_CASE("construction, dedup, chart") {
  LatticePolytope P =
      LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 0}, {1, 0}});
  CHECK(P.points().size() == 2);
  CHECK(P.dim() == 1);
  CHECK(P.ambient_dim() == 2);
  CHECK_THROWS_AS(LatticePolytope::from_points({}), ValidationError);
  CHECK_THROWS_AS(LatticePolytope::from_points({{0, 0}, {1}}), ValidationError);
  CHECK_THROWS_AS(
      LatticePolytope::from_points({{0, 0, 0, 0, 0, 0, 0}}), ValidationError);
  // A single point is a valid 0-dimensional polytope.
  LatticePolytope pt = LatticePolytope::from_points({{5, 7}});
  CHECK(pt.dim() == 0);
  CHECK(pt.normalized_volume() == 1);
}

TEST_CASE("chart respects the ambient lattice on skew segments") {
  // Segment from (0,0) to (2,2) contains the lattice point (1,1).
  LatticePolytope P = LatticePolytope::from_points({{0, 0}, {2, 2}});
  CHECK(P.dim() == 1);
  auto pts = P.lattice_points();
  CHECK(pts.size() == 3);
  auto in = P.interior_lattice_points();
  REQUIRE(in.size() == 1);
  CHECK(in[0] == IVec{1, 1});
  CHECK(P.normalized_volume() == 2);
}

TEST_CASE("facets of the unit square") {
  LatticePolytope P =
      LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(P.facets().size() == 4);
  CHECK(P.vertices().size() == 4);
  CHECK(P.contains(IVec{0, 0}));
  CHECK_FALSE(P.contains(IVec{2, 0}));
}

TEST_CASE("face lattice sizes match frozen counts") {
  LatticePolytope square =
      LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(square.face_lattice().faces.size() == 10);
  CHECK(simplex(1, 3).face_lattice().faces.size() == 16);
  CHECK(triangle3().face_lattice().faces.size() == 8);
  LatticePolytope tri = triangle3();
  const FaceLattice& fl = tri.face_lattice();
  CHECK(fl.faces[fl.empty_index].dim == -1);
  CHECK(fl.faces[fl.full_index].dim == 2);
  CHECK(fl.indices_of_dim(0).size() == 3);
  CHECK(fl.indices_of_dim(1).size() == 3);
  CHECK(fl.poset.is_eulerian());
}

TEST_CASE("face lattice carries all input points per face") {
  // Full lattice-point input: the edge faces of 3-triangle pick up their
  // interior lattice points too.
  std::vector<IVec> pts;
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; a + b <= 3; ++b) pts.push_back({a, b});
  LatticePolytope P = LatticePolytope::from_points(pts);
  const FaceLattice& fl = P.face_lattice();
  CHECK(fl.faces.size() == 8);
  for (size_t i : fl.indices_of_dim(1))
    CHECK(fl.faces[i].point_indices.size() == 4);  // 2 vertices + 2 interior
  CHECK(fl.faces[fl.full_index].point_indices.size() == 10);
}

TEST_CASE("lattice point enumeration on frozen examples") {
  auto in3 = triangle3().interior_lattice_points();
  REQUIRE(in3.size() == 1);
  CHECK(in3[0] == IVec{1, 1});
  auto in4 = simplex(4, 3).interior_lattice_points();
  REQUIRE(in4.size() == 1);
  CHECK(in4[0] == IVec{1, 1, 1});
  CHECK(triangle3().lattice_points().size() == 10);
  // Segment [0,s]: s-1 interior points.
  for (long s = 1; s <= 5; ++s) {
    LatticePolytope seg = LatticePolytope::from_points({{0}, {s}});
    CHECK(long(seg.interior_lattice_points().size()) == s - 1);
  }
  // Unit square has no interior points.
  LatticePolytope square =
      LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(square.interior_lattice_points().empty());
}

TEST_CASE("normalized volumes") {
  CHECK(triangle3().normalized_volume() == 9);
  LatticePolytope cube = LatticePolytope::from_points(
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
       {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  CHECK(cube.normalized_volume() == 6);
  CHECK(simplex(4, 3).normalized_volume() == 64);
  CHECK(simplex(1, 4).normalized_volume() == 1);
  LatticePolytope seg = LatticePolytope::from_points({{0}, {5}});
  CHECK(seg.normalized_volume() == 5);
}

TEST_CASE("Ehrhart h* on frozen examples") {
  UnivarPoly t = UnivarPoly::var();
  CHECK(LatticePolytope::from_points({{0}, {1}}).ehrhart_hstar() ==
        UnivarPoly(1));
  CHECK(LatticePolytope::from_points({{0}, {3}}).ehrhart_hstar() ==
        UnivarPoly(1) + t * BigInt(2));
  CHECK(triangle3().ehrhart_hstar() ==
        UnivarPoly(1) + t * BigInt(7) + t.pow(2));
  CHECK(simplex(1, 2).ehrhart_hstar() == UnivarPoly(1));
  CHECK(simplex(4, 3).ehrhart_hstar() ==
        UnivarPoly(1) + t * BigInt(31) + t.pow(2) * BigInt(31) + t.pow(3));
  CHECK(LatticePolytope::empty_polytope(2).ehrhart_hstar() == UnivarPoly(1));
}

TEST_CASE("Ehrhart reciprocity spot-check: top h* equals interior count") {
  std::vector<LatticePolytope> corpus = {
      triangle3(), simplex(2, 2), simplex(4, 3), simplex(2, 3),
      LatticePolytope::from_points({{0, 0}, {2, 0}, {0, 2}, {2, 2}}),
      LatticePolytope::from_points(
          {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
           {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})};
  for (const auto& P : corpus) {
    UnivarPoly h = P.ehrhart_hstar();
    CHECK(h.coeff(P.dim()) == BigInt(P.interior_lattice_points().size()));
  }
}

TEST_CASE("h-vector on frozen examples") {
  UnivarPoly t = UnivarPoly::var();
  CHECK(triangle3().h_vector() == UnivarPoly(1) + t + t.pow(2));
  LatticePolytope square =
      LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(square.h_vector() == UnivarPoly(1) + t * BigInt(2) + t.pow(2));
  for (long d = 1; d <= 4; ++d) {
    UnivarPoly expect;
    for (long k = 0; k <= d; ++k) expect += UnivarPoly::monomial(k, 1);
    CHECK(simplex(1, d).h_vector() == expect);
  }
}

TEST_CASE("h-vector symmetry for simple polytopes") {
  LatticePolytope cube = LatticePolytope::from_points(
      {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2},
       {2, 2, 0}, {2, 0, 2}, {0, 2, 2}, {2, 2, 2}});
  UnivarPoly h = cube.h_vector();
  long d = cube.dim();
  for (long k = 0; k <= d; ++k) CHECK(h.coeff(k) == h.coeff(d - k));
}

TEST_CASE("interiority class against the parent") {
  LatticePolytope P = triangle3();
  CHECK(interiority_class(LatticePolytope::from_points({{1, 1}}), P) == 0);
  CHECK(interiority_class(LatticePolytope::from_points({{0, 0}}), P) == 2);
  CHECK(interiority_class(LatticePolytope::from_points({{1, 0}, {2, 0}}), P) ==
        1);
  // A cell meeting the interior has carrier P even if it touches the boundary.
  CHECK(interiority_class(LatticePolytope::from_points({{0, 0}, {1, 1}}), P) ==
        0);
  CHECK_THROWS_AS(interiority_class(
                      LatticePolytope::from_points({{5, 5}}), P),
                  ValidationError);
  // Non-lattice-compatible point: (1,1)/... point outside affine lattice of a
  // skew parent.
  LatticePolytope skew = LatticePolytope::from_points({{0, 0}, {2, 2}});
  CHECK_THROWS_AS(interiority_class(
                      LatticePolytope::from_points({{1, 0}}), skew),
                  ValidationError);
}

TEST_CASE("octahedron face lattice is Eulerian with 28 faces") {
  LatticePolytope oct = LatticePolytope::from_points(
      {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  const FaceLattice& fl = oct.face_lattice();
  // 1 empty + 6 vertices + 12 edges + 8 triangles + 1 solid = 28.
  CHECK(fl.faces.size() == 28);
  CHECK(fl.poset.is_eulerian());
  CHECK(oct.normalized_volume() == 8);
}
