/*
 * Matroids on small ground sets (at most 12 elements), given by their bases.
 *
 * Subsets are bitmasks over the ground set.  Construction validates the
 * basis-exchange axiom and rejects loops.  Derived data: the rank function,
 * the lattice of flats with its Moebius function, characteristic polynomials,
 * the class of the associated hyperplane-arrangement complement, and the
 * fan of flags of flats.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "trop/polynomial.hpp"
#include "trop/poset.hpp"

namespace trop {

class Matroid {
 public:
  static constexpr long kMaxGround = 12;

  static Matroid uniform(long rank, long n);
  static Matroid from_bases(long n, const std::vector<std::vector<long>>& bases);

  long ground_size() const { return n_; }
  long rank() const { return rank_; }
  const std::vector<uint32_t>& bases() const { return bases_; }

  long rank_of(uint32_t subset) const;
  bool is_flat(uint32_t subset) const;
  /* All flats (the empty set and the ground set included), increasing mask. */
  const std::vector<uint32_t>& flats() const;
  /* Flats ordered by inclusion; element order matches flats(). */
  const FinitePoset& flats_lattice() const;
  size_t flat_index(uint32_t flat) const;  // UnknownElement if not a flat

  BigInt mobius_bottom(uint32_t flat) const;  // mu(empty flat, flat)

  /* Sum over proper flats of mu(0,F) q^(rank-1-r(F)). */
  UnivarPoly reduced_char_poly() const;
  /* Sum over all flats of mu(0,F) q^(rank-r(F)). */
  UnivarPoly classical_char_poly() const;
  /* (q * reduced(q) - reduced(1)) / (q - 1); the division is exact. */
  UnivarPoly complement_class() const;
  BigInt complement_euler() const;  // complement_class at q = 1

  /* Reduced Euler characteristic of the order complex of the open interval
   * below the flat; agrees with mobius_bottom.  NotAFlat unless the argument
   * is a flat of positive rank. */
  BigInt mobius_via_link(uint32_t flat) const;

 private:
  long n_ = 0;
  long rank_ = 0;
  std::vector<uint32_t> bases_;
  std::vector<uint8_t> rank_table_;  // 2^n entries
  mutable std::shared_ptr<const std::vector<uint32_t>> flats_;
  mutable std::shared_ptr<const FinitePoset> lattice_;

  void build_rank_table();
};

/* Cones spanned by flags of proper nonempty flats, in the quotient of R^n by
 * the all-ones line (coordinates: drop the last element).  `cones` lists ray
 * index sets, one per flag, the empty flag first; `maximal` indexes the
 * complete flags. */
struct BergmanFan {
  long dim = 0;
  std::vector<IVec> rays;                   // per proper nonempty flat
  std::vector<uint32_t> ray_flats;          // parallel to rays
  std::vector<std::vector<size_t>> cones;   // sorted ray index lists
  std::vector<size_t> maximal;              // indices into cones
};

BergmanFan bergman_fan(const Matroid& m);

}  // namespace trop
