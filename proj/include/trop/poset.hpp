/*
 * Finite posets with the machinery the rest of the library leans on:
 * Mobius function, gradedness/Eulerian tests, Stanley's G-polynomial of an
 * Eulerian poset, duals and intervals, and reduced Euler characteristics of
 * order complexes (simplices = chains).
 *
 * Elements are 0..n-1.  The order relation is stored as a dense <= matrix;
 * every poset handled here is small (face lattices, flat lattices at desk
 * scale), so quadratic storage is the simple and right choice.
 */
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "trop/polynomial.hpp"

namespace trop {

class FinitePoset {
public:
  FinitePoset() = default;

  /* Covers are (lower, upper) pairs; the full order is their reflexive
   * transitive closure.  Indices outside 0..n-1 are rejected. */
  static FinitePoset from_covers(size_t n,
                                 const std::vector<std::pair<long, long>>& covers);
  static FinitePoset from_leq(std::vector<std::vector<char>> leq);

  size_t size() const { return n_; }
  bool leq(size_t a, size_t b) const;
  bool less(size_t a, size_t b) const { return a != b && leq(a, b); }

  std::vector<std::pair<size_t, size_t>> cover_relations() const;
  std::optional<size_t> bottom() const;
  std::optional<size_t> top() const;

  bool is_graded() const;
  /* Rank of each element (longest chain from the bottom); requires a unique
   * bottom and top and covers raising rank by exactly 1, else NotGraded. */
  std::vector<long> ranks_checked() const;

  BigInt mobius(size_t x, size_t y) const;

  /* Graded, bounded, and mu(x,y) = (-1)^(rho(y)-rho(x)) throughout. */
  bool is_eulerian() const;

  /* Stanley's G-polynomial of the whole poset; NotEulerian when it is not. */
  UnivarPoly g_polynomial() const;

  FinitePoset dual() const;
  FinitePoset interval(size_t x, size_t y) const;
  FinitePoset open_interval(size_t x, size_t y) const;

  /* Reduced Euler characteristic of the order complex: -1 for the empty
   * poset, 0 for a singleton, (#antichain pairs)-style counts beyond. */
  BigInt order_complex_reduced_euler() const;

  /* Verify mu inverts zeta:  with g(y) = sum_{x<=y} f(x), recover each
   * f(y) as sum_{x<=y} mu(x,y) g(x). */
  bool mobius_inversion_check(const std::vector<BigInt>& f) const;

private:
  void check_element(size_t x) const;

  size_t n_ = 0;
  std::vector<std::vector<char>> leq_;
  mutable std::map<std::pair<size_t, size_t>, BigInt> mobius_memo_;
};

}  // namespace trop
