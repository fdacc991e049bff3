#include "trop/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace trop {

namespace {

/* Reduced row echelon form in place; returns pivot column per pivot row. */
std::vector<size_t> rref(QMat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    BigRat inv = BigRat(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      BigRat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

IVec clear_denominators(const QVec& v) {
  BigInt lcm(1);
  for (const auto& q : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  IVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    BigRat s = v[i] * BigRat(lcm);
    r[i] = s.get_num();
  }
  return r;
}

}  // namespace

long rank_of(const QMat& a) {
  QMat m = a;
  return static_cast<long>(rref(m).size());
}

long rank_of_int(const IMat& a) { return rank_of(to_q(a)); }

IMat kernel_basis(const QMat& a, size_t cols) {
  QMat m = a;
  std::vector<size_t> pivots = rref(m);
  std::vector<char> is_pivot(cols, 0);
  for (size_t c : pivots) is_pivot[c] = 1;
  IMat basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols, BigRat(0));
    v[free] = 1;
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      v[pivots[pr]] = -m[pr][free];
    basis.push_back(primitive(clear_denominators(v)));
  }
  return basis;
}

IMat kernel_basis_int(const IMat& a, size_t cols) {
  return kernel_basis(to_q(a), cols);
}

IMat integer_kernel(const IMat& a, size_t cols) {
  /* Column elimination with a unimodular transform: bring a*U to column
   * echelon form; the columns of U matching zero columns of a*U form a
   * saturated basis of the integer kernel. */
  size_t rows = a.size();
  IMat d = a;
  IMat u(cols, IVec(cols, BigInt(0)));
  for (size_t i = 0; i < cols; ++i) u[i][i] = 1;  // u stored as columns: u[j] = j-th column
  size_t col = 0;
  for (size_t r = 0; r < rows && col < cols; ++r) {
    /* Reduce row r over columns col..cols-1 to a single nonzero entry. */
    while (true) {
      size_t best = cols;
      for (size_t j = col; j < cols; ++j)
        if (d[r][j] != 0 && (best == cols || abs(d[r][j]) < abs(d[r][best])))
          best = j;
      if (best == cols) break;  // row already zero on the tail
      bool others = false;
      for (size_t j = col; j < cols; ++j) {
        if (j == best || d[r][j] == 0) continue;
        others = true;
        BigInt q = d[r][j] / d[r][best];  // truncated division is fine here
        for (size_t i = 0; i < rows; ++i) d[i][j] -= q * d[i][best];
        for (size_t i = 0; i < cols; ++i) u[i][j] -= q * u[i][best];
      }
      if (!others) {
        for (size_t i = 0; i < rows; ++i) std::swap(d[i][best], d[i][col]);
        for (size_t i = 0; i < cols; ++i) std::swap(u[i][best], u[i][col]);
        ++col;
        break;
      }
    }
  }
  IMat basis;
  for (size_t j = col; j < cols; ++j) {
    IVec v(cols);
    for (size_t i = 0; i < cols; ++i) v[i] = u[i][j];
    basis.push_back(v);
  }
  return basis;
}

IMat saturated_lattice_basis(const IMat& gens, size_t cols) {
  if (gens.empty()) return {};
  /* span(gens) = { x : k x = 0 } with k a basis of the orthogonal space;
   * intersecting with Z^n is then an integer-kernel computation, which the
   * unimodular column reduction returns saturated. */
  IMat k = kernel_basis_int(gens, cols);
  return integer_kernel(k, cols);
}

IVec primitive(IVec v, bool canonical) {
  BigInt g(0);
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return v;
  for (auto& x : v) x /= g;
  if (canonical) {
    for (const auto& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
  }
  return v;
}

BigInt det_int(IMat a) {
  size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign(1), prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t sel = k + 1;
      while (sel < n && a[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(a[sel], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] /= prev;  // Bareiss: division is exact
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

BigInt gcd_maximal_minors(const IMat& a) {
  size_t k = a.size();
  if (k == 0) return 1;
  size_t n = a[0].size();
  if (k > n)
    fail_invariant("ShapeMismatch", "more rows than columns in minor computation");
  std::vector<size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  BigInt g(0);
  while (true) {
    IMat sub(k, IVec(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) sub[i][j] = a[i][idx[j]];
    BigInt d = det_int(sub);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    /* next k-combination of {0..n-1} */
    size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return g;
}

bool solve(const QMat& a, const QVec& b, QVec& x) {
  size_t rows = a.size();
  size_t cols = rows == 0 ? 0 : a[0].size();
  QMat aug(rows, QVec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<size_t> pivots = rref(aug);
  for (size_t p = 0; p < pivots.size(); ++p)
    if (pivots[p] == cols) return false;  // pivot in the constant column
  x.assign(cols, BigRat(0));
  for (size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = aug[p][cols];
  return true;
}

bool coords_in_lattice_basis(const IMat& basis, const IVec& target, IVec& coords) {
  size_t m = basis.size();
  if (m == 0) {
    coords.clear();
    for (const auto& t : target)
      if (t != 0) return false;
    return true;
  }
  size_t n = basis[0].size();
  /* Solve basis^T c = target over Q, then require integrality. */
  QMat a(n, QVec(m));
  QVec b(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) a[i][j] = BigRat(basis[j][i]);
    b[i] = BigRat(target[i]);
  }
  QVec x;
  if (!solve(a, b, x)) return false;
  coords.assign(m, BigInt(0));
  for (size_t j = 0; j < m; ++j) {
    if (x[j].get_den() != 1) return false;
    coords[j] = x[j].get_num();
  }
  return true;
}

}  // namespace trop
