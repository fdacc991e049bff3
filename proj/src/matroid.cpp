#include "trop/matroid.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "trop/error.hpp"

namespace trop {

namespace {

long popcount(uint32_t x) { return std::popcount(x); }

}  // namespace

Matroid Matroid::uniform(long rank, long n) {
  if (n < 1 || n > kMaxGround)
    fail_validation(n > kMaxGround ? "DimensionTooLarge" : "InvalidMatroid",
                    "ground set size out of range");
  if (rank < 1 || rank > n)
    fail_validation("InvalidMatroid",
                    "uniform rank must be between 1 and the ground size");
  Matroid m;
  m.n_ = n;
  m.rank_ = rank;
  for (uint32_t s = 0; s < (uint32_t(1) << n); ++s)
    if (popcount(s) == rank) m.bases_.push_back(s);
  m.build_rank_table();
  return m;
}

Matroid Matroid::from_bases(long n,
                            const std::vector<std::vector<long>>& bases) {
  if (n < 1 || n > kMaxGround)
    fail_validation(n > kMaxGround ? "DimensionTooLarge" : "InvalidMatroid",
                    "ground set size out of range");
  if (bases.empty())
    fail_validation("InvalidMatroid", "a matroid needs at least one basis");
  Matroid m;
  m.n_ = n;
  std::set<uint32_t> seen;
  for (const auto& b : bases) {
    uint32_t mask = 0;
    for (long e : b) {
      if (e < 0 || e >= n)
        fail_validation("InvalidMatroid", "basis element out of range");
      if (mask & (uint32_t(1) << e))
        fail_validation("InvalidMatroid", "repeated element in a basis");
      mask |= uint32_t(1) << e;
    }
    seen.insert(mask);
  }
  m.bases_.assign(seen.begin(), seen.end());
  m.rank_ = popcount(m.bases_[0]);
  uint32_t covered = 0;
  for (uint32_t b : m.bases_) {
    if (popcount(b) != m.rank_)
      fail_validation("InvalidMatroid", "bases of unequal size");
    covered |= b;
  }
  if (covered != (uint32_t(1) << n) - 1)
    fail_validation("InvalidMatroid",
                    "element in no basis (loops are not supported)");
  /* Basis exchange: for all bases A, B and x in A \ B there is y in B \ A
   * with A - x + y again a basis. */
  for (uint32_t a : m.bases_)
    for (uint32_t b : m.bases_) {
      if (a == b) continue;
      for (uint32_t rest = a & ~b; rest; rest &= rest - 1) {
        uint32_t without = a ^ (rest & -rest);
        bool found = false;
        for (uint32_t add = b & ~a; add && !found; add &= add - 1)
          if (seen.count(without | (add & -add))) found = true;
        if (!found)
          fail_validation("InvalidMatroid", "basis exchange axiom fails");
      }
    }
  m.build_rank_table();
  return m;
}

void Matroid::build_rank_table() {
  rank_table_.assign(size_t(1) << n_, 0);
  for (uint32_t s = 0; s < (uint32_t(1) << n_); ++s) {
    long best = 0;
    for (uint32_t b : bases_) best = std::max(best, popcount(s & b));
    rank_table_[s] = uint8_t(best);
  }
}

long Matroid::rank_of(uint32_t subset) const {
  if (subset >= (uint32_t(1) << n_))
    fail_validation("UnknownElement", "subset outside the ground set");
  return rank_table_[subset];
}

bool Matroid::is_flat(uint32_t subset) const {
  long r = rank_of(subset);
  for (long j = 0; j < n_; ++j) {
    uint32_t bit = uint32_t(1) << j;
    if ((subset & bit) == 0 && rank_table_[subset | bit] == r) return false;
  }
  return true;
}

const std::vector<uint32_t>& Matroid::flats() const {
  if (!flats_) {
    auto out = std::make_shared<std::vector<uint32_t>>();
    for (uint32_t s = 0; s < (uint32_t(1) << n_); ++s)
      if (is_flat(s)) out->push_back(s);
    flats_ = std::move(out);
  }
  return *flats_;
}

const FinitePoset& Matroid::flats_lattice() const {
  if (!lattice_) {
    const auto& fl = flats();
    std::vector<std::vector<char>> leq(fl.size(),
                                       std::vector<char>(fl.size(), 0));
    for (size_t i = 0; i < fl.size(); ++i)
      for (size_t j = 0; j < fl.size(); ++j)
        leq[i][j] = (fl[i] & ~fl[j]) == 0;
    lattice_ =
        std::make_shared<FinitePoset>(FinitePoset::from_leq(std::move(leq)));
  }
  return *lattice_;
}

size_t Matroid::flat_index(uint32_t flat) const {
  const auto& fl = flats();
  auto it = std::lower_bound(fl.begin(), fl.end(), flat);
  if (it == fl.end() || *it != flat)
    fail_validation("UnknownElement", "not a flat of the matroid");
  return size_t(it - fl.begin());
}

BigInt Matroid::mobius_bottom(uint32_t flat) const {
  return flats_lattice().mobius(flat_index(0), flat_index(flat));
}

UnivarPoly Matroid::reduced_char_poly() const {
  UnivarPoly chi;
  uint32_t full = (uint32_t(1) << n_) - 1;
  for (uint32_t f : flats()) {
    if (f == full) continue;
    chi += UnivarPoly::monomial(rank_ - 1 - rank_of(f), mobius_bottom(f));
  }
  return chi;
}

UnivarPoly Matroid::classical_char_poly() const {
  UnivarPoly chi;
  for (uint32_t f : flats())
    chi += UnivarPoly::monomial(rank_ - rank_of(f), mobius_bottom(f));
  return chi;
}

UnivarPoly Matroid::complement_class() const {
  UnivarPoly chi = reduced_char_poly();
  UnivarPoly numerator =
      UnivarPoly::var() * chi - UnivarPoly::monomial(0, chi.eval_int(1));
  UnivarPoly denominator = UnivarPoly::var() - UnivarPoly::monomial(0, 1);
  return exact_divide(numerator, denominator);
}

BigInt Matroid::complement_euler() const {
  return complement_class().eval_int(1);
}

BigInt Matroid::mobius_via_link(uint32_t flat) const {
  if (flat >= (uint32_t(1) << n_) || !is_flat(flat) || rank_of(flat) < 1)
    fail_validation("NotAFlat", "expected a flat of positive rank");
  FinitePoset open = flats_lattice().open_interval(flat_index(0), flat_index(flat));
  return open.order_complex_reduced_euler();
}

BergmanFan bergman_fan(const Matroid& m) {
  BergmanFan fan;
  const long n = m.ground_size();
  fan.dim = m.rank() - 1;
  uint32_t full = (uint32_t(1) << n) - 1;
  for (uint32_t f : m.flats()) {
    if (f == 0 || f == full) continue;
    IVec v(size_t(n) - 1, BigInt(0));
    bool has_last = (f >> (n - 1)) & 1;
    for (long i = 0; i + 1 < n; ++i)
      v[size_t(i)] = BigInt(((f >> i) & 1) ? 1 : 0) - BigInt(has_last ? 1 : 0);
    fan.ray_flats.push_back(f);
    fan.rays.push_back(std::move(v));
  }
  /* Flags of proper nonempty flats, grown upward; every prefix is emitted. */
  std::vector<std::vector<size_t>> stack;
  stack.push_back({});
  while (!stack.empty()) {
    std::vector<size_t> flag = stack.back();
    stack.pop_back();
    fan.cones.push_back(flag);
    for (size_t i = flag.empty() ? 0 : flag.back() + 1; i < fan.rays.size();
         ++i) {
      uint32_t candidate = fan.ray_flats[i];
      uint32_t prev = flag.empty() ? 0 : fan.ray_flats[flag.back()];
      if ((prev & ~candidate) == 0 && prev != candidate) {
        std::vector<size_t> next = flag;
        next.push_back(i);
        stack.push_back(std::move(next));
      }
    }
  }
  std::sort(fan.cones.begin(), fan.cones.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (size_t i = 0; i < fan.cones.size(); ++i)
    if (long(fan.cones[i].size()) == m.rank() - 1) fan.maximal.push_back(i);
  return fan;
}

}  // namespace trop
