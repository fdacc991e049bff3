#include "trop/poset.hpp"

#include <algorithm>
#include <numeric>

#include "trop/error.hpp"

namespace trop {

void FinitePoset::check_element(size_t x) const {
  if (x >= n_) fail_validation("UnknownElement", "poset element index out of range");
}

FinitePoset FinitePoset::from_covers(size_t n,
                                     const std::vector<std::pair<long, long>>& covers) {
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i) leq[i][i] = 1;
  for (const auto& [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || size_t(lo) >= n || size_t(hi) >= n)
      fail_validation("UnknownElement", "cover relation mentions an element outside 0..n-1");
    if (lo == hi) fail_validation("SchemaMismatch", "cover relation relates an element to itself");
    leq[lo][hi] = 1;
  }
  // Transitive closure; cycles would make some element <= and >= another.
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) {
      if (!leq[i][k]) continue;
      for (size_t j = 0; j < n; ++j)
        if (leq[k][j]) leq[i][j] = 1;
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (leq[i][j] && leq[j][i])
        fail_validation("SchemaMismatch", "cover relations contain a cycle");
  return from_leq(std::move(leq));
}

FinitePoset FinitePoset::from_leq(std::vector<std::vector<char>> leq) {
  FinitePoset p;
  p.n_ = leq.size();
  p.leq_ = std::move(leq);
  return p;
}

bool FinitePoset::leq(size_t a, size_t b) const {
  check_element(a);
  check_element(b);
  return leq_[a][b] != 0;
}

std::vector<std::pair<size_t, size_t>> FinitePoset::cover_relations() const {
  std::vector<std::pair<size_t, size_t>> covers;
  for (size_t a = 0; a < n_; ++a)
    for (size_t b = 0; b < n_; ++b) {
      if (!(a != b && leq_[a][b])) continue;
      bool is_cover = true;
      for (size_t z = 0; z < n_ && is_cover; ++z)
        if (z != a && z != b && leq_[a][z] && leq_[z][b]) is_cover = false;
      if (is_cover) covers.emplace_back(a, b);
    }
  return covers;
}

std::optional<size_t> FinitePoset::bottom() const {
  for (size_t b = 0; b < n_; ++b) {
    bool ok = true;
    for (size_t x = 0; x < n_ && ok; ++x) ok = leq_[b][x];
    if (ok) return b;
  }
  return std::nullopt;
}

std::optional<size_t> FinitePoset::top() const {
  for (size_t t = 0; t < n_; ++t) {
    bool ok = true;
    for (size_t x = 0; x < n_ && ok; ++x) ok = leq_[x][t];
    if (ok) return t;
  }
  return std::nullopt;
}

std::vector<long> FinitePoset::ranks_checked() const {
  auto bot = bottom();
  auto tp = top();
  if (!bot || !tp)
    fail_validation("NotGraded", "poset lacks a unique minimum or maximum");
  (void)tp;
  // Longest chain from the bottom; iterate to a fixed point (the poset is
  // acyclic, so this terminates with rank <= n).
  std::vector<long> rank(n_, -1);
  rank[*bot] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t a = 0; a < n_; ++a) {
      if (rank[a] < 0) continue;
      for (size_t b = 0; b < n_; ++b) {
        if (a == b || !leq_[a][b]) continue;
        if (rank[b] < rank[a] + 1) {
          rank[b] = rank[a] + 1;
          changed = true;
        }
      }
    }
  }
  for (size_t x = 0; x < n_; ++x)
    if (rank[x] < 0) fail_validation("NotGraded", "element not above the minimum");
  for (const auto& [a, b] : cover_relations())
    if (rank[b] != rank[a] + 1)
      fail_validation("NotGraded", "a cover relation does not raise rank by one");
  return rank;
}

bool FinitePoset::is_graded() const {
  try {
    ranks_checked();
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

BigInt FinitePoset::mobius(size_t x, size_t y) const {
  check_element(x);
  check_element(y);
  if (!leq_[x][y]) return 0;
  if (x == y) return 1;
  auto key = std::make_pair(x, y);
  auto it = mobius_memo_.find(key);
  if (it != mobius_memo_.end()) return it->second;
  BigInt acc = 0;
  for (size_t z = 0; z < n_; ++z)
    if (leq_[x][z] && z != y && leq_[z][y]) acc += mobius(x, z);
  acc = -acc;
  mobius_memo_[key] = acc;
  return acc;
}

bool FinitePoset::is_eulerian() const {
  std::vector<long> rank;
  try {
    rank = ranks_checked();
  } catch (const ValidationError&) {
    return false;
  }
  for (size_t x = 0; x < n_; ++x)
    for (size_t y = 0; y < n_; ++y) {
      if (!leq_[x][y]) continue;
      long d = rank[y] - rank[x];
      BigInt expect = (d % 2 == 0) ? 1 : -1;
      if (mobius(x, y) != expect) return false;
    }
  return true;
}

UnivarPoly FinitePoset::g_polynomial() const {
  if (!is_eulerian())
    fail_validation("NotEulerian", "G-polynomial requires an Eulerian poset");
  std::vector<long> rank = ranks_checked();
  size_t tp = *top();
  // G([x, top]) for every x, filled from the top down by rank.
  std::vector<UnivarPoly> g_up(n_);
  std::vector<size_t> order(n_);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return rank[a] > rank[b]; });
  UnivarPoly tm1 = UnivarPoly::var() - UnivarPoly(1);
  for (size_t x : order) {
    if (!leq_[x][tp]) continue;  // unreachable in a bounded poset, kept for safety
    long n_x = rank[tp] - rank[x];
    if (n_x == 0) {
      g_up[x] = UnivarPoly(1);
      continue;
    }
    UnivarPoly sum;
    for (size_t z = 0; z < n_; ++z) {
      if (!(x != z && leq_[x][z] && leq_[z][tp])) continue;
      sum += tm1.pow(rank[z] - rank[x]) * g_up[z];
    }
    // Keep degrees strictly below n_x/2, i.e. below floor((n_x+1)/2).
    g_up[x] = -(sum.truncate_below((n_x + 1) / 2));
  }
  return g_up[*bottom()];
}

FinitePoset FinitePoset::dual() const {
  std::vector<std::vector<char>> leq(n_, std::vector<char>(n_, 0));
  for (size_t a = 0; a < n_; ++a)
    for (size_t b = 0; b < n_; ++b) leq[a][b] = leq_[b][a];
  return from_leq(std::move(leq));
}

FinitePoset FinitePoset::interval(size_t x, size_t y) const {
  check_element(x);
  check_element(y);
  std::vector<size_t> members;
  for (size_t z = 0; z < n_; ++z)
    if (leq_[x][z] && leq_[z][y]) members.push_back(z);
  std::vector<std::vector<char>> leq(members.size(),
                                     std::vector<char>(members.size(), 0));
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j)
      leq[i][j] = leq_[members[i]][members[j]];
  return from_leq(std::move(leq));
}

FinitePoset FinitePoset::open_interval(size_t x, size_t y) const {
  check_element(x);
  check_element(y);
  std::vector<size_t> members;
  for (size_t z = 0; z < n_; ++z)
    if (z != x && z != y && leq_[x][z] && leq_[z][y]) members.push_back(z);
  std::vector<std::vector<char>> leq(members.size(),
                                     std::vector<char>(members.size(), 0));
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j)
      leq[i][j] = leq_[members[i]][members[j]];
  return from_leq(std::move(leq));
}

BigInt FinitePoset::order_complex_reduced_euler() const {
  // chains[v][m] = number of m-element chains with maximum v.
  // A chain of m elements is an (m-1)-simplex of the order complex.
  // Build a linear extension by repeatedly taking minimal elements.
  std::vector<char> placed(n_, 0);
  std::vector<size_t> topo;
  topo.reserve(n_);
  while (topo.size() < n_) {
    for (size_t v = 0; v < n_; ++v) {
      if (placed[v]) continue;
      bool minimal = true;
      for (size_t u = 0; u < n_ && minimal; ++u)
        if (!placed[u] && u != v && leq_[u][v]) minimal = false;
      if (minimal) {
        placed[v] = 1;
        topo.push_back(v);
      }
    }
  }
  std::vector<std::vector<BigInt>> chains(n_);
  BigInt chi = -1;  // the empty simplex
  long sign = 1;    // (-1)^(m-1) for m-element chains, starting at m=1
  std::vector<BigInt> count_by_len(n_ + 1, BigInt(0));
  for (size_t idx = 0; idx < topo.size(); ++idx) {
    size_t v = topo[idx];
    chains[v].assign(n_ + 1, BigInt(0));
    chains[v][1] = 1;
    for (size_t jdx = 0; jdx < idx; ++jdx) {
      size_t u = topo[jdx];
      if (!(u != v && leq_[u][v])) continue;
      for (size_t m = 1; m + 1 <= n_; ++m)
        if (chains[u][m] != 0) chains[v][m + 1] += chains[u][m];
    }
    for (size_t m = 1; m <= n_; ++m) count_by_len[m] += chains[v][m];
  }
  for (size_t m = 1; m <= n_; ++m) {
    if (count_by_len[m] != 0) chi += sign * count_by_len[m];
    sign = -sign;
  }
  return chi;
}

bool FinitePoset::mobius_inversion_check(const std::vector<BigInt>& f) const {
  if (f.size() != n_)
    fail_validation("SchemaMismatch", "function values must match poset size");
  std::vector<BigInt> g(n_, BigInt(0));
  for (size_t y = 0; y < n_; ++y)
    for (size_t x = 0; x < n_; ++x)
      if (leq_[x][y]) g[y] += f[x];
  for (size_t y = 0; y < n_; ++y) {
    BigInt back = 0;
    for (size_t x = 0; x < n_; ++x)
      if (leq_[x][y]) back += mobius(x, y) * g[x];
    if (back != f[y]) return false;
  }
  return true;
}

}  // namespace trop
