#include "trop/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "trop/linalg.hpp"

namespace trop {

std::vector<size_t> Subdivision::indices_of_dim(long d) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < cells.size(); ++i)
    if (cells[i].dim == d) out.push_back(i);
  return out;
}

LatticePolytope Subdivision::cell_polytope(size_t cell_index) const {
  std::vector<IVec> pts;
  for (size_t i : cells.at(cell_index).point_indices) pts.push_back(points[i]);
  return LatticePolytope::from_points(pts, parent.ambient_dim() + 1);
}

size_t Subdivision::cell_index_of(const std::vector<size_t>& pi) const {
  for (size_t i = 0; i < cells.size(); ++i)
    if (cells[i].point_indices == pi) return i;
  fail_validation("UnknownElement", "no cell with the requested point set");
}

namespace {

/* Codimension in the parent of the smallest parent face containing the given
 * point set.  Faces are scanned in dimension order, so the first containing
 * face is the carrier. */
long carrier_codim(const FaceLattice& fl, long parent_dim,
                   const std::vector<size_t>& cell_points) {
  for (const PolytopeFace& f : fl.faces) {
    if (f.dim < 0) continue;
    if (std::includes(f.point_indices.begin(), f.point_indices.end(),
                      cell_points.begin(), cell_points.end()))
      return parent_dim - f.dim;
  }
  fail_validation("NotContained", "cell points missing from the parent");
}

}  // namespace

Subdivision regular_subdivision(const std::vector<IVec>& raw_points,
                                const std::vector<BigInt>& raw_lifts,
                                long dim_cap) {
  if (raw_points.empty())
    fail_validation("DegenerateInput", "no points supplied");
  if (raw_points.size() != raw_lifts.size())
    fail_validation("SchemaMismatch",
                    "points and lifts must have the same length");

  Subdivision S;
  {
    std::map<IVec, size_t> index_of;
    for (size_t i = 0; i < raw_points.size(); ++i) {
      auto [it, fresh] = index_of.try_emplace(raw_points[i], S.points.size());
      if (fresh) {
        S.points.push_back(raw_points[i]);
        S.lifts.push_back(raw_lifts[i]);
      } else if (raw_lifts[i] < S.lifts[it->second]) {
        S.lifts[it->second] = raw_lifts[i];
      }
    }
  }
  S.parent = LatticePolytope::from_points(S.points, dim_cap);
  const long D = S.parent.dim();
  const size_t n = S.points.size();

  std::vector<QVec> chart(n);
  for (size_t i = 0; i < n; ++i)
    chart[i] = to_q(S.parent.chart_coords(S.points[i]));

  /* Maximal cells: for every affinely independent (D+1)-subset, the unique
   * affine function through its lifted points; if it underestimates every
   * lift, its tight set is a maximal cell. */
  std::map<std::vector<size_t>, std::pair<QVec, BigRat>> max_cells;
  if (D == 0) {
    std::vector<size_t> all(n);
    for (size_t i = 0; i < n; ++i) all[i] = i;
    max_cells[all] = {QVec{}, BigRat(0)};
  } else {
    std::vector<size_t> comb(size_t(D) + 1, 0);
    for (size_t i = 0; i <= size_t(D); ++i) comb[i] = i;
    while (true) {
      QMat rows;
      QVec rhs;
      for (size_t i : comb) {
        QVec row = chart[i];
        row.push_back(BigRat(1));
        rows.push_back(std::move(row));
        rhs.push_back(BigRat(S.lifts[i]));
      }
      QVec sol;
      if (rank_of(rows) == D + 1 && solve(rows, rhs, sol)) {
        QVec slope(sol.begin(), sol.end() - 1);
        BigRat offset = sol.back();
        bool lower = true;
        std::vector<size_t> tight;
        for (size_t j = 0; j < n && lower; ++j) {
          BigRat val = dot_q(slope, chart[j]) + offset;
          int c = cmp(val, BigRat(S.lifts[j]));
          if (c > 0) lower = false;
          else if (c == 0) tight.push_back(j);
        }
        if (lower) max_cells.try_emplace(tight, std::move(slope), offset);
      }
      /* next combination */
      size_t k = comb.size();
      while (k > 0 && comb[k - 1] == n - comb.size() + (k - 1)) --k;
      if (k == 0) break;
      ++comb[k - 1];
      for (size_t j = k; j < comb.size(); ++j) comb[j] = comb[j - 1] + 1;
    }
    if (max_cells.empty())
      fail_validation("DegenerateInput", "no full-dimensional cell found");
  }

  /* All cells: faces of the maximal cells, with point indices mapped back. */
  std::map<std::vector<size_t>, long> cell_dims;
  for (const auto& [tight, fn] : max_cells) {
    std::vector<IVec> pts;
    for (size_t i : tight) pts.push_back(S.points[i]);
    LatticePolytope cp = LatticePolytope::from_points(pts, dim_cap + 1);
    const FaceLattice& fl = cp.face_lattice();
    for (const PolytopeFace& f : fl.faces) {
      if (f.dim < 0) continue;
      std::vector<size_t> global;
      for (size_t local : f.point_indices) global.push_back(tight[local]);
      std::sort(global.begin(), global.end());
      cell_dims[global] = f.dim;
    }
  }

  const FaceLattice& parent_fl = S.parent.face_lattice();
  std::vector<std::pair<long, std::vector<size_t>>> ordered;
  for (const auto& [pts, d] : cell_dims) ordered.emplace_back(d, pts);
  std::sort(ordered.begin(), ordered.end());
  for (const auto& [d, pts] : ordered) {
    SubdivisionCell c;
    c.point_indices = pts;
    c.dim = d;
    c.interiority = carrier_codim(parent_fl, D, pts);
    if (d == D) {
      S.maximal.push_back(S.cells.size());
      const auto& fn = max_cells.at(pts);
      S.max_slopes.push_back(fn.first);
      S.max_offsets.push_back(fn.second);
    }
    S.cells.push_back(std::move(c));
  }
  return S;
}

}  // namespace trop
