#include "trop/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "trop/error.hpp"
#include "trop/numeric.hpp"

namespace trop {

std::vector<size_t> FaceLattice::indices_of_dim(long d) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < faces.size(); ++i)
    if (faces[i].dim == d) out.push_back(i);
  return out;
}

LatticePolytope LatticePolytope::from_points(const std::vector<IVec>& pts,
                                             long dim_cap) {
  if (pts.empty()) fail_validation("DegenerateInput", "no points supplied");
  LatticePolytope P;
  P.ambient_dim_ = long(pts[0].size());
  P.dim_cap_ = dim_cap;
  if (P.ambient_dim_ > dim_cap)
    fail_validation("DimensionTooLarge",
                    "ambient dimension " + std::to_string(P.ambient_dim_) +
                        " exceeds cap " + std::to_string(dim_cap));
  std::set<IVec> seen;
  for (const auto& p : pts) {
    if (long(p.size()) != P.ambient_dim_)
      fail_validation("SchemaMismatch", "points of mixed dimension");
    if (seen.insert(p).second) P.points_.push_back(p);
  }
  P.base_ = P.points_[0];
  IMat dirs;
  for (size_t i = 1; i < P.points_.size(); ++i) {
    IVec d(P.ambient_dim_);
    for (long j = 0; j < P.ambient_dim_; ++j)
      d[j] = P.points_[i][j] - P.base_[j];
    dirs.push_back(std::move(d));
  }
  P.chart_ = saturated_lattice_basis(dirs, P.ambient_dim_);
  P.dim_ = long(P.chart_.size());
  return P;
}

LatticePolytope LatticePolytope::empty_polytope(long ambient_dim) {
  LatticePolytope P;
  P.ambient_dim_ = ambient_dim;
  P.dim_ = -1;
  return P;
}

IVec LatticePolytope::chart_coords(const IVec& ambient_point) const {
  if (long(ambient_point.size()) != ambient_dim_)
    fail_validation("SchemaMismatch", "point of wrong dimension");
  IVec diff(ambient_dim_);
  for (long j = 0; j < ambient_dim_; ++j)
    diff[j] = ambient_point[j] - base_[j];
  IVec coords;
  if (!coords_in_lattice_basis(chart_, diff, coords))
    fail_validation("NotContained",
                    "point is not in the affine lattice of the polytope");
  return coords;
}

IVec LatticePolytope::ambient_coords(const IVec& chart_point) const {
  IVec out = base_;
  for (size_t k = 0; k < chart_.size(); ++k)
    for (long j = 0; j < ambient_dim_; ++j)
      out[j] += chart_point[k] * chart_[k][j];
  return out;
}

std::vector<IVec> LatticePolytope::chart_points() const {
  std::vector<IVec> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(chart_coords(p));
  return out;
}

void LatticePolytope::ensure_facets() const {
  if (facets_) return;
  facets_.emplace();
  long d = dim_;
  if (d <= 0) return;
  std::vector<IVec> cp = chart_points();
  size_t m = cp.size();

  // Cheap pre-filter: a point that is the midpoint of two other points of
  // the set is not a vertex and cannot be needed to define a facet together
  // with the full tightness pass below.  The filter only ever removes
  // non-extreme points, so facet correctness does not depend on it.
  std::set<IVec> have(cp.begin(), cp.end());
  std::vector<char> is_mid(m, 0);
  for (size_t i = 0; i < m && m > 2; ++i) {
    for (size_t a = 0; a < m && !is_mid[i]; ++a) {
      if (a == i) continue;
      // midpoint condition: 2*cp[i] - cp[a] is some other point of the set
      IVec other(size_t(d), BigInt(0));
      for (long j = 0; j < d; ++j) other[j] = 2 * cp[i][j] - cp[a][j];
      if (other != cp[i] && other != cp[a] && have.count(other)) is_mid[i] = 1;
    }
  }
  std::vector<size_t> cand;
  for (size_t i = 0; i < m; ++i)
    if (!is_mid[i]) cand.push_back(i);

  std::set<std::pair<IVec, BigInt>> emitted;
  // Every facet spans a hyperplane through d affinely independent points.
  std::vector<size_t> comb(size_t(d), 0);
  auto try_subset = [&](const std::vector<size_t>& sel) {
    IMat dirs;
    for (size_t k = 1; k < sel.size(); ++k) {
      IVec v(size_t(d), BigInt(0));
      for (long j = 0; j < d; ++j) v[j] = cp[sel[k]][j] - cp[sel[0]][j];
      dirs.push_back(std::move(v));
    }
    if (rank_of_int(dirs) != d - 1) return;
    auto kb = kernel_basis_int(dirs, d);
    if (kb.size() != 1) return;
    IVec a = primitive(kb[0]);
    BigInt b = dot(a, cp[sel[0]]);
    bool any_above = false, any_below = false;
    for (const auto& p : cp) {
      int c = cmp(dot(a, p), b);
      if (c > 0) any_above = true;
      if (c < 0) any_below = true;
      if (any_above && any_below) return;  // not supporting
    }
    if (any_below) {
      for (auto& x : a) x = -x;
      b = -b;
    } else if (!any_above) {
      return;  // all points on the hyperplane: degenerate, not a facet
    }
    if (!emitted.insert({a, b}).second) return;
    PolytopeFacet f;
    f.normal = std::move(a);
    f.offset = std::move(b);
    for (size_t i = 0; i < m; ++i)
      if (dot(f.normal, cp[i]) == f.offset) f.tight.push_back(i);
    facets_->push_back(std::move(f));
  };
  // Iterate d-combinations of candidate indices.
  size_t nc = cand.size();
  if (long(nc) < d) fail_invariant("DegenerateInput", "facet search underflow");
  for (size_t k = 0; k < size_t(d); ++k) comb[k] = k;
  while (true) {
    std::vector<size_t> sel(size_t(d), 0);
    for (size_t k = 0; k < size_t(d); ++k) sel[k] = cand[comb[k]];
    try_subset(sel);
    long pos = d - 1;
    while (pos >= 0 && comb[size_t(pos)] == nc - size_t(d - pos)) --pos;
    if (pos < 0) break;
    ++comb[size_t(pos)];
    for (size_t k = size_t(pos) + 1; k < size_t(d); ++k)
      comb[k] = comb[k - 1] + 1;
  }
  std::sort(facets_->begin(), facets_->end(),
            [](const PolytopeFacet& x, const PolytopeFacet& y) {
              return std::pair(x.normal, x.offset) < std::pair(y.normal, y.offset);
            });
}

const std::vector<PolytopeFacet>& LatticePolytope::facets() const {
  ensure_facets();
  return *facets_;
}

bool LatticePolytope::contains(const IVec& ambient_point) const {
  if (is_empty()) return false;
  IVec diff(ambient_dim_);
  for (long j = 0; j < ambient_dim_; ++j)
    diff[j] = ambient_point[j] - base_[j];
  IVec y;
  if (!coords_in_lattice_basis(chart_, diff, y)) return false;
  for (const auto& f : facets())
    if (dot(f.normal, y) < f.offset) return false;
  return true;
}

std::vector<size_t> LatticePolytope::vertex_indices() const {
  std::vector<size_t> out;
  if (is_empty()) return out;
  if (dim_ == 0) return {0};
  std::vector<IVec> cp = chart_points();
  for (size_t i = 0; i < points_.size(); ++i) {
    IMat normals;
    for (const auto& f : facets())
      if (dot(f.normal, cp[i]) == f.offset) normals.push_back(f.normal);
    if (rank_of_int(normals) == dim_) out.push_back(i);
  }
  return out;
}

std::vector<IVec> LatticePolytope::vertices() const {
  std::vector<IVec> out;
  for (size_t i : vertex_indices()) out.push_back(points_[i]);
  return out;
}

std::vector<IVec> LatticePolytope::lattice_points() const {
  std::vector<IVec> out;
  if (is_empty()) return out;
  if (dim_ == 0) return {points_[0]};
  std::vector<IVec> cp = chart_points();
  long d = dim_;
  IVec lo = cp[0], hi = cp[0];
  for (const auto& p : cp)
    for (long j = 0; j < d; ++j) {
      if (p[j] < lo[j]) lo[j] = p[j];
      if (p[j] > hi[j]) hi[j] = p[j];
    }
  IVec y = lo;
  while (true) {
    bool inside = true;
    for (const auto& f : facets())
      if (dot(f.normal, y) < f.offset) {
        inside = false;
        break;
      }
    if (inside) out.push_back(ambient_coords(y));
    long j = 0;
    for (; j < d; ++j) {
      if (y[j] < hi[j]) {
        ++y[j];
        break;
      }
      y[j] = lo[j];
    }
    if (j == d) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IVec> LatticePolytope::interior_lattice_points() const {
  std::vector<IVec> out;
  if (is_empty()) return out;
  // The relative interior of a point is the point itself.
  if (dim_ == 0) return {points_[0]};
  std::vector<IVec> cp = chart_points();
  long d = dim_;
  IVec lo = cp[0], hi = cp[0];
  for (const auto& p : cp)
    for (long j = 0; j < d; ++j) {
      if (p[j] < lo[j]) lo[j] = p[j];
      if (p[j] > hi[j]) hi[j] = p[j];
    }
  IVec y = lo;
  while (true) {
    bool inside = true;
    for (const auto& f : facets())
      if (dot(f.normal, y) <= f.offset) {
        inside = false;
        break;
      }
    if (inside) out.push_back(ambient_coords(y));
    long j = 0;
    for (; j < d; ++j) {
      if (y[j] < hi[j]) {
        ++y[j];
        break;
      }
      y[j] = lo[j];
    }
    if (j == d) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt LatticePolytope::normalized_volume() const {
  if (is_empty()) fail_invariant("DegenerateInput", "volume of empty polytope");
  if (dim_ == 0) return 1;
  // Pyramids from the first vertex over the facets that miss it; the lattice
  // height of the apex over a facet is |<a, apex> - b| since a is primitive.
  std::vector<IVec> cp = chart_points();
  size_t apex = vertex_indices()[0];
  BigInt total = 0;
  for (const auto& f : facets()) {
    BigInt height = dot(f.normal, cp[apex]) - f.offset;
    if (height == 0) continue;
    std::vector<IVec> fpts;
    for (size_t i : f.tight) fpts.push_back(points_[i]);
    LatticePolytope F = from_points(fpts, dim_cap_);
    total += F.normalized_volume() * abs(height);
  }
  return total;
}

UnivarPoly LatticePolytope::ehrhart_hstar() const {
  if (is_empty()) return UnivarPoly(1);
  long d = dim_;
  // f(k) = #(kP cap Z^n), counted in chart coordinates with scaled facet
  // offsets; k*base stays a lattice point so the chart lattice is unchanged.
  std::vector<BigInt> f(size_t(d) + 1);
  f[0] = 1;
  if (d >= 1) {
    std::vector<IVec> cp = chart_points();
    for (long k = 1; k <= d; ++k) {
      IVec lo(size_t(d), BigInt(0)), hi(size_t(d), BigInt(0));
      for (long j = 0; j < d; ++j) {
        lo[j] = cp[0][j] * k;
        hi[j] = cp[0][j] * k;
      }
      for (const auto& p : cp)
        for (long j = 0; j < d; ++j) {
          if (p[j] * k < lo[j]) lo[j] = p[j] * k;
          if (p[j] * k > hi[j]) hi[j] = p[j] * k;
        }
      BigInt count = 0;
      IVec y = lo;
      while (true) {
        bool inside = true;
        for (const auto& fc : facets())
          if (dot(fc.normal, y) < fc.offset * k) {
            inside = false;
            break;
          }
        if (inside) ++count;
        long j = 0;
        for (; j < d; ++j) {
          if (y[j] < hi[j]) {
            ++y[j];
            break;
          }
          y[j] = lo[j];
        }
        if (j == d) break;
      }
      f[size_t(k)] = count;
    }
  }
  UnivarPoly h;
  for (long j = 0; j <= d; ++j) {
    BigInt c = 0;
    for (long i = 0; i <= j; ++i) {
      BigInt term = binomial(d + 1, j - i) * f[size_t(i)];
      if ((j - i) % 2 == 0)
        c += term;
      else
        c -= term;
    }
    if (c < 0)
      fail_invariant("NonNegativityViolation",
                     "negative Ehrhart h* coefficient at degree " +
                         std::to_string(j));
    h += UnivarPoly::monomial(j, c);
  }
  return h;
}

UnivarPoly LatticePolytope::h_vector() const {
  if (is_empty()) fail_validation("DegenerateInput", "h-vector of empty polytope");
  const FaceLattice& fl = face_lattice();
  UnivarPoly t = UnivarPoly::var();
  UnivarPoly one(1);
  UnivarPoly h;
  for (const auto& face : fl.faces) {
    if (face.dim < 0) continue;
    h += t.pow(dim_ - face.dim) * (one - t).pow(face.dim);
  }
  return h;
}

const FaceLattice& LatticePolytope::face_lattice() const {
  if (face_lattice_) return *face_lattice_;
  if (is_empty())
    fail_validation("DegenerateInput", "face lattice of empty polytope");
  auto fl = std::make_shared<FaceLattice>();

  std::vector<IVec> cp = chart_points();
  auto dim_of = [&](const std::vector<size_t>& idxs) -> long {
    if (idxs.empty()) return -1;
    IMat dirs;
    for (size_t k = 1; k < idxs.size(); ++k) {
      IVec v(cp[0].size());
      for (size_t j = 0; j < cp[0].size(); ++j)
        v[j] = cp[idxs[k]][j] - cp[idxs[0]][j];
      dirs.push_back(std::move(v));
    }
    return rank_of_int(dirs);
  };

  std::set<std::vector<size_t>> sets;
  std::vector<size_t> all(points_.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  sets.insert(all);
  if (dim_ > 0) {
    // Every proper face is an intersection of facets: close the facet tight
    // sets under intersection, starting from the full point set.
    std::vector<std::vector<size_t>> work(sets.begin(), sets.end());
    while (!work.empty()) {
      std::vector<size_t> s = std::move(work.back());
      work.pop_back();
      for (const auto& f : facets()) {
        std::vector<size_t> inter;
        std::set_intersection(s.begin(), s.end(), f.tight.begin(),
                              f.tight.end(), std::back_inserter(inter));
        if (inter.empty()) continue;
        if (sets.insert(inter).second) work.push_back(std::move(inter));
      }
    }
  }
  sets.insert(std::vector<size_t>{});  // the empty face

  for (const auto& s : sets) {
    PolytopeFace face;
    face.point_indices = s;
    face.dim = dim_of(s);
    if (s.empty()) {
      for (size_t fi = 0; fi < facets().size(); ++fi)
        face.tight_facets.push_back(fi);
      if (dim_ == 0) face.tight_facets.clear();
    } else {
      for (size_t fi = 0; fi < facets().size(); ++fi) {
        bool tight = true;
        for (size_t i : s)
          if (dot((*facets_)[fi].normal, cp[i]) != (*facets_)[fi].offset) {
            tight = false;
            break;
          }
        if (tight) face.tight_facets.push_back(fi);
      }
    }
    fl->faces.push_back(std::move(face));
  }
  std::sort(fl->faces.begin(), fl->faces.end(),
            [](const PolytopeFace& a, const PolytopeFace& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.point_indices < b.point_indices;
            });
  std::vector<std::vector<char>> leq(fl->faces.size(),
                                     std::vector<char>(fl->faces.size(), 0));
  for (size_t a = 0; a < fl->faces.size(); ++a)
    for (size_t b = 0; b < fl->faces.size(); ++b) {
      const auto& pa = fl->faces[a].point_indices;
      const auto& pb = fl->faces[b].point_indices;
      leq[a][b] = std::includes(pb.begin(), pb.end(), pa.begin(), pa.end());
    }
  fl->poset = FinitePoset::from_leq(std::move(leq));
  fl->empty_index = 0;
  fl->full_index = fl->faces.size() - 1;
  face_lattice_ = fl;
  return *face_lattice_;
}

LatticePolytope LatticePolytope::face_polytope(const PolytopeFace& f) const {
  if (f.point_indices.empty()) return empty_polytope(ambient_dim_);
  std::vector<IVec> pts;
  for (size_t i : f.point_indices) pts.push_back(points_[i]);
  return from_points(pts, dim_cap_);
}

long interiority_class(const LatticePolytope& cell,
                       const LatticePolytope& parent) {
  if (cell.is_empty())
    fail_validation("DegenerateInput", "interiority of the empty cell");
  // Every cell point must lie in the parent (in its affine lattice and on the
  // right side of every facet); the carrier is the intersection of the parent
  // facets tight on the whole cell.
  std::vector<IVec> cp;
  for (const auto& p : cell.points()) {
    if (!parent.contains(p))
      fail_validation("NotContained", "cell has a point outside the parent");
    cp.push_back(parent.chart_coords(p));
  }
  std::vector<size_t> tight;
  const auto& pf = parent.facets();
  for (size_t fi = 0; fi < pf.size(); ++fi) {
    bool all_tight = true;
    for (const auto& y : cp)
      if (dot(pf[fi].normal, y) != pf[fi].offset) {
        all_tight = false;
        break;
      }
    if (all_tight) tight.push_back(fi);
  }
  if (tight.empty()) return 0;
  // Carrier dimension: rank of directions among parent points tight on all
  // facets in `tight`.
  std::vector<IVec> carrier;
  for (const auto& p : parent.points()) {
    IVec y = parent.chart_coords(p);
    bool ok = true;
    for (size_t fi : tight)
      if (dot(pf[fi].normal, y) != pf[fi].offset) {
        ok = false;
        break;
      }
    if (ok) carrier.push_back(std::move(y));
  }
  IMat dirs;
  for (size_t k = 1; k < carrier.size(); ++k) {
    IVec v(carrier[0].size());
    for (size_t j = 0; j < carrier[0].size(); ++j)
      v[j] = carrier[k][j] - carrier[0][j];
    dirs.push_back(std::move(v));
  }
  return parent.dim() - rank_of_int(dirs);
}

}  // namespace trop
