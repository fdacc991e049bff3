#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trop/linalg.hpp"

using namespace trop;

TEST_CASE("rank over Q") {
  QMat m = {{BigRat(1), BigRat(2)}, {BigRat(2), BigRat(4)}};
  CHECK(rank_of(m) == 1);
  IMat im = {{1, 0, 1}, {0, 1, 1}, {1, 1, 2}};
  CHECK(rank_of_int(im) == 2);
  CHECK(rank_of_int({}) == 0);
}

TEST_CASE("kernel bases are genuine kernels") {
  IMat m = {{1, 1, 1}};
  auto kb = kernel_basis_int(m, 3);
  REQUIRE(kb.size() == 2);
  for (const auto& k : kb) CHECK(dot(m[0], k) == 0);
  IMat stacked = kb;
  CHECK(rank_of_int(stacked) == 2);
}

TEST_CASE("integer kernel is saturated") {
  // Kernel of (2 2) over Z must contain (1,-1), not only (2,-2).
  IMat m = {{2, 2}};
  auto kb = integer_kernel(m, 2);
  REQUIRE(kb.size() == 1);
  CHECK((kb[0] == IVec{1, -1} || kb[0] == IVec{-1, 1}));
}

TEST_CASE("saturated lattice basis of a span") {
  // span{(2,0),(0,2)} meets Z^2 in all of Z^2.
  auto basis = saturated_lattice_basis({{2, 0}, {0, 2}}, 2);
  REQUIRE(basis.size() == 2);
  IMat b = basis;
  CHECK((det_int(b) == 1 || det_int(b) == -1));

  // span{(1,1,0),(0,0,1)} meets Z^3 in exactly that lattice.
  auto basis2 = saturated_lattice_basis({{2, 2, 0}, {0, 0, 3}}, 3);
  REQUIRE(basis2.size() == 2);
  IVec coords;
  CHECK(coords_in_lattice_basis(basis2, {1, 1, 0}, coords));
  CHECK(coords_in_lattice_basis(basis2, {0, 0, 1}, coords));
  CHECK_FALSE(coords_in_lattice_basis(basis2, {1, 0, 0}, coords));
}

TEST_CASE("primitive vectors") {
  CHECK(primitive({4, -6}) == IVec{2, -3});
  CHECK(primitive({0, 0, 5}) == IVec{0, 0, 1});
  CHECK(primitive({-2, 0}, /*canonical=*/true) == IVec{1, 0});
}

TEST_CASE("integer determinant (Bareiss)") {
  CHECK(det_int({{3}}) == 3);
  CHECK(det_int({{1, 2}, {3, 4}}) == -2);
  CHECK(det_int({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 30);
  CHECK(det_int({{1, 1}, {1, 1}}) == 0);
  // Row swaps must carry signs.
  CHECK(det_int({{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("gcd of maximal minors") {
  CHECK(gcd_maximal_minors({{1, 0}, {0, 1}}) == 1);
  CHECK(gcd_maximal_minors({{2, 0}, {0, 2}}) == 4);
  // Octahedron edge-cone generators: index-2 sublattice.
  CHECK(gcd_maximal_minors({{1, 1, 1}, {1, 1, -1}}) == 2);
  CHECK(gcd_maximal_minors({{1, 1}, {2, 2}}) == 0);
  CHECK(gcd_maximal_minors({{1, 2, 3}}) == 1);
}

TEST_CASE("rational linear solve") {
  QMat a = {{BigRat(1), BigRat(1)}, {BigRat(1), BigRat(-1)}};
  QVec x;
  REQUIRE(solve(a, {BigRat(3), BigRat(1)}, x));
  CHECK(x[0] == BigRat(2));
  CHECK(x[1] == BigRat(1));
  QMat bad = {{BigRat(1), BigRat(1)}, {BigRat(2), BigRat(2)}};
  CHECK_FALSE(solve(bad, {BigRat(0), BigRat(1)}, x));
  // Consistent underdetermined systems still produce a solution.
  REQUIRE(solve(bad, {BigRat(1), BigRat(2)}, x));
  CHECK(x[0] + x[1] == BigRat(1));
}
