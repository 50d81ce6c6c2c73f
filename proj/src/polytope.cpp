#include "cayleykit/polytope.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

namespace cayleykit {

AffineLatticeMap AffineLatticeMap::identity(std::size_t n) {
  return {IntMatrix::identity(n), IntVec(n)};
}

IntVec AffineLatticeMap::apply(const IntVec& x) const {
  IntVec y = matrix.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += translation[i];
  return y;
}

bool AffineLatticeMap::is_lattice_projection() const {
  IntMatrix d = smith_normal_form(matrix).d;
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    if (i >= d.cols() || d(i, i) != 1) return false;
  }
  return true;
}

namespace {

// Solves basis^T * c = v by back-substitution along the echelon rows of the
// hull basis; nullopt when v is outside the rational row span.
std::optional<RatVec> echelon_coordinates(const std::vector<IntVec>& basis,
                                          RatVec v) {
  RatVec c(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::size_t lead = 0;
    while (lead < basis[k].size() && basis[k][lead] == 0) ++lead;
    c[k] = v[lead] / Rat(basis[k][lead]);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c[k] * Rat(basis[k][j]);
  }
  for (const Rat& x : v)
    if (x != 0) return std::nullopt;
  return c;
}

}  // namespace

LatticePolytope::LatticePolytope(std::size_t ambient_dim,
                                 std::vector<IntVec> points)
    : ambient_(ambient_dim), points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("polytope needs points");
  for (const IntVec& p : points_)
    if (p.size() != ambient_)
      throw std::invalid_argument("point dimension mismatch");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  base_ = points_.front();

  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    IntVec d(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) d[j] = points_[i][j] - base_[j];
    diffs.push_back(std::move(d));
  }
  IntMatrix diff_matrix = IntMatrix::from_rows(diffs, ambient_);
  std::vector<IntVec> kern = kernel_basis(diff_matrix);
  dim_ = ambient_ - kern.size();

  if (dim_ == 0) {
    vertices_ = points_;
    hull_points_.assign(points_.size(), IntVec{});
    return;
  }

  // Basis of the saturated difference lattice = (affine hull - base) cap Z^n,
  // canonicalized through the Hermite form.
  std::vector<IntVec> sat;
  if (dim_ == ambient_) {
    for (std::size_t i = 0; i < ambient_; ++i) {
      IntVec e(ambient_);
      e[i] = 1;
      sat.push_back(std::move(e));
    }
  } else {
    sat = kernel_basis(IntMatrix::from_rows(kern, ambient_));
    IntMatrix h = hermite_normal_form(IntMatrix::from_rows(sat, ambient_)).h;
    sat.clear();
    for (std::size_t i = 0; i < dim_; ++i) sat.push_back(h.row(i));
  }
  hull_basis_ = std::move(sat);

  for (const IntVec& p : points_) {
    RatVec v(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) v[j] = Rat(p[j] - base_[j]);
    auto c = echelon_coordinates(hull_basis_, std::move(v));
    if (!c) throw std::logic_error("point outside its own affine hull");
    IntVec ci(dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
      if ((*c)[k].get_den() != 1)
        throw std::logic_error("difference outside the saturated lattice");
      ci[k] = (*c)[k].get_num();
    }
    hull_points_.push_back(std::move(ci));
  }

  // Facets of the full-dimensional image: hyperplanes through affinely
  // independent dim_-subsets of the points that bound all points.
  const std::size_t m = hull_points_.size();
  std::set<std::pair<IntVec, Int>> seen;
  std::vector<std::size_t> idx(dim_);
  for (std::size_t i = 0; i < dim_; ++i) idx[i] = i;
  if (dim_ <= m) {
    for (;;) {
      std::vector<IntVec> rows;
      for (std::size_t i = 1; i < dim_; ++i) {
        IntVec d(dim_);
        for (std::size_t j = 0; j < dim_; ++j)
          d[j] = hull_points_[idx[i]][j] - hull_points_[idx[0]][j];
        rows.push_back(std::move(d));
      }
      std::vector<IntVec> kernel =
          kernel_basis(IntMatrix::from_rows(rows, dim_));
      if (kernel.size() == 1) {
        IntVec normal = kernel.front();
        make_primitive(normal);
        Int here = dot(normal, hull_points_[idx[0]]);
        Int lo = here, hi = here;
        for (const IntVec& q : hull_points_) {
          Int val = dot(normal, q);
          if (val < lo) lo = val;
          if (val > hi) hi = val;
        }
        if (here == hi && lo < hi) {
          seen.emplace(normal, hi);
        } else if (here == lo && lo < hi) {
          IntVec neg(dim_);
          for (std::size_t j = 0; j < dim_; ++j) neg[j] = -normal[j];
          seen.emplace(std::move(neg), -lo);
        }
      }
      // next combination
      std::size_t i = dim_;
      while (i > 0 && idx[i - 1] == m - dim_ + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t k = i; k < dim_; ++k) idx[k] = idx[k - 1] + 1;
    }
  }
  for (auto& [normal, offset] : seen) facets_.push_back({normal, offset});

  // A point is extreme iff the normals of its tight facets span the space.
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<IntVec> tight;
    for (const Facet& f : facets_)
      if (dot(f.normal, hull_points_[i]) == f.offset)
        tight.push_back(f.normal);
    if (integer_rank(IntMatrix::from_rows(tight, dim_)) == dim_)
      vertices_.push_back(points_[i]);
  }
}

bool LatticePolytope::contains(const IntVec& x) const {
  RatVec q(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) q[i] = Rat(x[i]);
  return contains_rational(q);
}

bool LatticePolytope::contains_rational(const RatVec& x) const {
  if (x.size() != ambient_) throw std::invalid_argument("dimension mismatch");
  RatVec v(ambient_);
  for (std::size_t i = 0; i < ambient_; ++i) v[i] = x[i] - Rat(base_[i]);
  if (dim_ == 0) {
    for (const Rat& e : v)
      if (e != 0) return false;
    return true;
  }
  auto c = echelon_coordinates(hull_basis_, std::move(v));
  if (!c) return false;
  for (const Facet& f : facets_) {
    Rat val;
    for (std::size_t j = 0; j < dim_; ++j) val += Rat(f.normal[j]) * (*c)[j];
    if (val > Rat(f.offset)) return false;
  }
  return true;
}

std::vector<IntVec> LatticePolytope::lattice_points() const {
  IntVec lo = vertices_.front(), hi = vertices_.front();
  for (const IntVec& v : vertices_)
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }
  std::vector<IntVec> out;
  IntVec x = lo;
  for (;;) {
    if (contains(x)) out.push_back(x);
    std::size_t j = ambient_;
    while (j > 0 && x[j - 1] == hi[j - 1]) --j;
    if (j == 0) return out;
    ++x[j - 1];
    for (std::size_t k = j; k < ambient_; ++k) x[k] = lo[k];
  }
}

LatticePolytope dilate(const LatticePolytope& p, const Int& k) {
  if (k < 0) throw std::invalid_argument("dilation factor must be >= 0");
  std::vector<IntVec> pts;
  for (const IntVec& v : p.vertices()) {
    IntVec w(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) w[j] = k * v[j];
    pts.push_back(std::move(w));
  }
  return LatticePolytope(p.ambient_dim(), std::move(pts));
}

LatticePolytope cayley_sum(const std::vector<LatticePolytope>& summands) {
  if (summands.empty()) throw std::invalid_argument("empty Cayley sum");
  const std::size_t s = summands.front().ambient_dim();
  for (const LatticePolytope& p : summands)
    if (p.ambient_dim() != s)
      throw std::invalid_argument("Cayley summands have mismatched dimension");
  const std::size_t r = summands.size() - 1;
  std::vector<IntVec> pts;
  for (std::size_t i = 0; i < summands.size(); ++i)
    for (const IntVec& v : summands[i].vertices()) {
      IntVec w(s + r);
      for (std::size_t j = 0; j < s; ++j) w[j] = v[j];
      if (i > 0) w[s + i - 1] = 1;
      pts.push_back(std::move(w));
    }
  return LatticePolytope(s + r, std::move(pts));
}

LatticePolytope apply_map(const AffineLatticeMap& f,
                          const LatticePolytope& p) {
  if (f.matrix.cols() != p.ambient_dim())
    throw std::invalid_argument("map/polytope dimension mismatch");
  std::vector<IntVec> pts;
  for (const IntVec& v : p.vertices()) pts.push_back(f.apply(v));
  return LatticePolytope(f.matrix.rows(), std::move(pts));
}

bool is_unimodular_simplex(const LatticePolytope& p) {
  const std::size_t n = p.ambient_dim();
  if (p.vertices().size() != n + 1) return false;
  std::vector<IntVec> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    IntVec d(n);
    for (std::size_t j = 0; j < n; ++j)
      d[j] = p.vertices()[i][j] - p.vertices()[0][j];
    edges.push_back(std::move(d));
  }
  auto index = lattice_index(edges, n);
  return index && *index == 1;
}

RestrictResult restrict_to_affine_hull(const LatticePolytope& p) {
  const std::size_t n = p.ambient_dim();
  if (p.is_full_dimensional())
    return {p, AffineLatticeMap::identity(n)};
  const std::size_t d = p.dimension();
  LatticePolytope q(d, p.hull_points());
  IntMatrix emb(n, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < n; ++i) emb(i, k) = p.hull_basis()[k][i];
  return {std::move(q), AffineLatticeMap{std::move(emb), p.base_point()}};
}

}  // namespace cayleykit
