#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "trop/subdivision.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "trop/linalg.hpp"

using namespace trop;

namespace {

std::vector<IVec> dilated_triangle_points(long k) {
  std::vector<IVec> pts;
  for (long a = 0; a <= k; ++a)
    for (long b = 0; a + b <= k; ++b) pts.push_back({a, b});
  return pts;
}

/* Quadratic lift a^2 + ab + b^2; subdividing the dilated triangle with it
 * produces the unimodular honeycomb triangulation. */
std::vector<BigInt> quadratic_lift(const std::vector<IVec>& pts) {
  std::vector<BigInt> lifts;
  for (const IVec& p : pts)
    lifts.push_back(p[0] * p[0] + p[0] * p[1] + p[1] * p[1]);
  return lifts;
}

long count_interiority(const Subdivision& S, long dim, long interiority) {
  long n = 0;
  for (const auto& c : S.cells)
    if (c.dim == dim && c.interiority == interiority) ++n;
  return n;
}

BigInt total_maximal_volume(const Subdivision& S) {
  BigInt total(0);
  for (size_t i : S.maximal) total += S.cell_polytope(i).normalized_volume();
  return total;
}

void check_pairwise_faces(const Subdivision& S) {
  std::set<std::vector<size_t>> cell_sets;
  for (const auto& c : S.cells) cell_sets.insert(c.point_indices);
  for (size_t a = 0; a < S.maximal.size(); ++a)
    for (size_t b = a + 1; b < S.maximal.size(); ++b) {
      const auto& A = S.cells[S.maximal[a]].point_indices;
      const auto& B = S.cells[S.maximal[b]].point_indices;
      std::vector<size_t> common;
      std::set_intersection(A.begin(), A.end(), B.begin(), B.end(),
                            std::back_inserter(common));
      if (!common.empty()) CHECK(cell_sets.count(common) == 1);
    }
}

}  // namespace

TEST_CASE("three collinear points with a vee lift split into two segments") {
  Subdivision S = regular_subdivision({{0}, {1}, {2}}, {BigInt(1), BigInt(0), BigInt(1)});
  REQUIRE(S.maximal.size() == 2);
  CHECK(S.cells[S.maximal[0]].point_indices == std::vector<size_t>{0, 1});
  CHECK(S.cells[S.maximal[1]].point_indices == std::vector<size_t>{1, 2});
  CHECK(S.cells.size() == 5);  // 3 vertices + 2 segments
  CHECK(S.max_slopes[0] == QVec{BigRat(-1)});
  CHECK(S.max_offsets[0] == BigRat(1));
  CHECK(S.max_slopes[1] == QVec{BigRat(1)});
  CHECK(S.max_offsets[1] == BigRat(-1));
  CHECK(count_interiority(S, 0, 0) == 1);  // the middle vertex
  CHECK(count_interiority(S, 0, 1) == 2);  // the endpoints
  CHECK(count_interiority(S, 1, 0) == 2);  // both segments touch the interior
  CHECK(total_maximal_volume(S) == 2);
}

TEST_CASE("zero lift gives the trivial subdivision") {
  Subdivision S = regular_subdivision({{0}, {1}, {2}, {3}},
                                      std::vector<BigInt>(4, BigInt(0)));
  REQUIRE(S.maximal.size() == 1);
  CHECK(S.cells[S.maximal[0]].point_indices == std::vector<size_t>{0, 1, 2, 3});
  CHECK(S.cells.size() == 3);  // two endpoint vertices + the full segment
  CHECK(S.max_slopes[0] == QVec{BigRat(0)});
  CHECK(S.max_offsets[0] == BigRat(0));
  CHECK(total_maximal_volume(S) == 3);
}

TEST_CASE("points lifted above the envelope do not participate") {
  Subdivision S = regular_subdivision({{0}, {1}, {2}},
                                      {BigInt(0), BigInt(5), BigInt(0)});
  REQUIRE(S.maximal.size() == 1);
  CHECK(S.cells[S.maximal[0]].point_indices == std::vector<size_t>{0, 2});
  CHECK(S.cells.size() == 3);
  CHECK(total_maximal_volume(S) == 2);
}

TEST_CASE("duplicate points merge keeping the lowest lift") {
  Subdivision S = regular_subdivision({{0}, {0}, {1}},
                                      {BigInt(7), BigInt(1), BigInt(0)});
  REQUIRE(S.points.size() == 2);
  CHECK(S.lifts[0] == 1);
  CHECK(S.lifts[1] == 0);
  REQUIRE(S.maximal.size() == 1);
  CHECK(S.cells[S.maximal[0]].point_indices == std::vector<size_t>{0, 1});
}

TEST_CASE("quadratic lift of the dilated triangle yields the honeycomb") {
  auto pts = dilated_triangle_points(3);
  Subdivision S = regular_subdivision(pts, quadratic_lift(pts));
  CHECK(S.maximal.size() == 9);
  CHECK(S.indices_of_dim(2).size() == 9);
  CHECK(S.indices_of_dim(1).size() == 18);
  CHECK(S.indices_of_dim(0).size() == 10);
  CHECK(S.cells.size() == 37);
  for (size_t i : S.maximal) {
    CHECK(S.cells[i].point_indices.size() == 3);
    CHECK(S.cell_polytope(i).normalized_volume() == 1);
  }
  CHECK(count_interiority(S, 2, 0) == 9);
  CHECK(count_interiority(S, 1, 0) == 9);  // interior edges
  CHECK(count_interiority(S, 1, 1) == 9);  // boundary edges
  CHECK(count_interiority(S, 0, 0) == 1);  // the centroid (1,1)
  CHECK(count_interiority(S, 0, 1) == 6);  // edge midpoints
  CHECK(count_interiority(S, 0, 2) == 3);  // corners
  CHECK(total_maximal_volume(S) == 9);
  check_pairwise_faces(S);
}

TEST_CASE("zero lift on the dilated triangle recovers its face structure") {
  auto pts = dilated_triangle_points(3);
  Subdivision S =
      regular_subdivision(pts, std::vector<BigInt>(pts.size(), BigInt(0)));
  REQUIRE(S.maximal.size() == 1);
  CHECK(S.indices_of_dim(2).size() == 1);
  CHECK(S.indices_of_dim(1).size() == 3);
  CHECK(S.indices_of_dim(0).size() == 3);
  for (size_t i : S.indices_of_dim(1))
    CHECK(S.cells[i].point_indices.size() == 4);
  CHECK(S.cells[S.maximal[0]].point_indices.size() == 10);
}

TEST_CASE("volumes add up under assorted lifts") {
  auto pts = dilated_triangle_points(3);
  // A deterministic scattering of lifts; values chosen to break ties.
  std::vector<BigInt> lifts;
  long seed = 11;
  for (size_t i = 0; i < pts.size(); ++i) {
    seed = (seed * 37 + 13) % 101;
    lifts.push_back(seed);
  }
  Subdivision S = regular_subdivision(pts, lifts);
  CHECK(total_maximal_volume(S) == 9);
  check_pairwise_faces(S);

  std::vector<IVec> cube;
  for (long x = 0; x <= 1; ++x)
    for (long y = 0; y <= 1; ++y)
      for (long z = 0; z <= 1; ++z) cube.push_back({x, y, z});
  std::vector<BigInt> clifts;
  for (size_t i = 0; i < cube.size(); ++i) {
    seed = (seed * 29 + 7) % 97;
    clifts.push_back(seed);
  }
  Subdivision C = regular_subdivision(cube, clifts);
  CHECK(total_maximal_volume(C) == 6);
  check_pairwise_faces(C);
}

TEST_CASE("cell lookup and input validation") {
  Subdivision S = regular_subdivision({{0}, {1}}, {BigInt(0), BigInt(0)});
  CHECK(S.cells[S.cell_index_of({0, 1})].dim == 1);
  CHECK(S.cells[S.cell_index_of({0})].dim == 0);
  CHECK_THROWS_AS((void)S.cell_index_of({0, 1, 2}), ValidationError);
  CHECK_THROWS_AS(regular_subdivision({{0}}, {BigInt(0), BigInt(1)}),
                  ValidationError);
  CHECK_THROWS_AS(regular_subdivision({}, {}), ValidationError);
}
