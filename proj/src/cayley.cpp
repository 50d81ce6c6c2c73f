#include "cayleykit/cayley.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cayleykit/width.hpp"

namespace cayleykit {

namespace {

// One candidate row of a certificate: a functional with values {0,1} on P.
// Every width-one direction contributes two atoms, the normalization
// <v,x> - min and its complement 1 - that; certificates may need either
// sign, so both are searched. Canonical-sign atoms come first, keeping the
// returned certificate minimal in the documented atom order.
struct DirectionTable {
  std::vector<IntVec> direction;   // atom i: row vector
  std::vector<Int> translation;    // atom i: affine part
  // hit[i][k] = atom i takes value 1 at vertex k
  std::vector<std::vector<bool>> hit;
};

DirectionTable direction_table(const LatticePolytope& p) {
  DirectionTable t;
  for (const WidthOneDirection& d : width_one_directions(p)) {
    IntVec neg(d.direction.size());
    for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -d.direction[j];
    t.direction.push_back(d.direction);
    t.translation.push_back(-d.offset);
    t.direction.push_back(std::move(neg));
    t.translation.push_back(d.offset + 1);
  }
  for (std::size_t i = 0; i < t.direction.size(); ++i) {
    std::vector<bool> row;
    for (const IntVec& v : p.vertices())
      row.push_back(dot(v, t.direction[i]) + t.translation[i] == 1);
    t.hit.push_back(std::move(row));
  }
  return t;
}

std::optional<CayleyStructure> assemble(const LatticePolytope& p,
                                        const DirectionTable& t,
                                        const std::vector<std::size_t>& pick) {
  const std::size_t n = p.ambient_dim();
  const std::size_t r = pick.size();
  IntMatrix a(r, n);
  IntVec trans(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = t.direction[pick[i]][j];
    trans[i] = t.translation[pick[i]];
  }
  AffineLatticeMap proj{std::move(a), std::move(trans)};

  // Vertices map into {0, e_1, ..., e_r}, so by convexity every lattice
  // point does too; read the labels off the images.
  std::vector<int> labels;
  for (const IntVec& u : p.lattice_points()) {
    IntVec img = proj.apply(u);
    int label = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (img[i] == 0) continue;
      if (img[i] != 1 || label != 0) return std::nullopt;
      label = static_cast<int>(i) + 1;
    }
    labels.push_back(label);
  }
  return CayleyStructure{r, std::move(proj), std::move(labels)};
}

}  // namespace

std::optional<CayleyStructure> find_cayley_structure(const LatticePolytope& p,
                                                     std::size_t r) {
  if (!p.is_full_dimensional())
    throw std::invalid_argument("polytope is not full-dimensional; restrict_to_affine_hull first");
  if (r < 1 || r > p.ambient_dim())
    throw std::invalid_argument("length out of range");

  DirectionTable t = direction_table(p);
  const std::size_t m = t.direction.size();
  if (m < r) return std::nullopt;
  const std::size_t nverts = p.vertices().size();

  std::vector<std::size_t> pick;
  std::vector<int> used(nverts, 0);  // how many chosen atoms hit each vertex
  std::optional<CayleyStructure> found;

  // Depth-first over increasing atom indices; the first completed pick is
  // the smallest compatible subset in the atom order. A valid pick needs
  // pairwise disjoint hit sets plus a vertex mapping to the simplex origin.
  auto dfs = [&](auto&& self, std::size_t next) -> bool {
    if (pick.size() == r) {
      bool zero_attained = false;
      for (std::size_t k = 0; k < nverts && !zero_attained; ++k)
        if (used[k] == 0) zero_attained = true;
      if (!zero_attained) return false;
      found = assemble(p, t, pick);
      return found.has_value();
    }
    for (std::size_t i = next; i + (r - pick.size()) <= m; ++i) {
      bool clash = false;
      for (std::size_t k = 0; k < nverts && !clash; ++k)
        if (t.hit[i][k] && used[k] != 0) clash = true;
      if (clash) continue;
      for (std::size_t k = 0; k < nverts; ++k)
        if (t.hit[i][k]) ++used[k];
      pick.push_back(i);
      if (self(self, i + 1)) return true;
      pick.pop_back();
      for (std::size_t k = 0; k < nverts; ++k)
        if (t.hit[i][k]) --used[k];
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

std::size_t max_cayley_length(const LatticePolytope& p) {
  if (!p.is_full_dimensional())
    throw std::invalid_argument("polytope is not full-dimensional; restrict_to_affine_hull first");
  for (std::size_t r = p.ambient_dim(); r >= 1; --r)
    if (find_cayley_structure(p, r)) return r + 1;
  return 1;
}

VerifyResult verify_cayley_structure(const LatticePolytope& p,
                                     const CayleyStructure& s) {
  const std::size_t n = p.ambient_dim();
  const std::size_t r = s.r;
  if (s.projection.matrix.rows() != r || s.projection.matrix.cols() != n ||
      s.projection.translation.size() != r)
    throw std::invalid_argument("certificate dimension mismatch");
  if (r < 1) return {false, "length out of range"};

  std::vector<IntVec> pts = p.lattice_points();
  if (s.labels.size() != pts.size()) return {false, "labels misaligned"};

  std::vector<int> image_label(pts.size(), 0);
  for (std::size_t idx = 0; idx < pts.size(); ++idx) {
    IntVec img = s.projection.apply(pts[idx]);
    int label = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (img[i] == 0) continue;
      if (img[i] != 1 || label != 0) return {false, "image not in simplex"};
      label = static_cast<int>(i) + 1;
    }
    image_label[idx] = label;
  }
  for (std::size_t idx = 0; idx < pts.size(); ++idx)
    if (s.labels[idx] != image_label[idx]) return {false, "label mismatch"};

  std::vector<bool> attained(r + 1, false);
  for (const IntVec& v : p.vertices()) {
    IntVec img = s.projection.apply(v);
    int label = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (img[i] == 1) label = static_cast<int>(i) + 1;
    attained[label] = true;
  }
  for (std::size_t i = 0; i <= r; ++i)
    if (!attained[i]) return {false, "value not attained by a vertex"};

  for (std::size_t i = 0; i < r; ++i) {
    IntVec row = s.projection.matrix.row(i);
    bool zero = true;
    for (const Int& x : row)
      if (x != 0) zero = false;
    if (zero || width_along(p, row) != 1) return {false, "row width not one"};
  }

  if (!s.projection.is_lattice_projection())
    return {false, "projection not surjective"};
  return {true, {}};
}

CayleyDecomposition extract_summands(const LatticePolytope& p,
                                     const CayleyStructure& s) {
  VerifyResult vr = verify_cayley_structure(p, s);
  if (!vr) throw std::invalid_argument("invalid certificate: " + vr.reason);

  const std::size_t n = p.ambient_dim();
  const std::size_t r = s.r;
  // Surjectivity makes the Hermite form of A^T equal [I_r; 0], so A is the
  // top r rows of the unimodular matrix S = U^{-T}; the bottom rows complete
  // it to a change of coordinates Z^n = Z^{n-r} x Z^r.
  auto [h, u] = hermite_normal_form(s.projection.matrix.transposed());
  IntMatrix smat = unimodular_inverse(u.transposed());
  IntMatrix w(n, n);
  for (std::size_t i = 0; i < n - r; ++i)
    for (std::size_t j = 0; j < n; ++j) w(i, j) = smat(r + i, j);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) w(n - r + i, j) = smat(i, j);

  std::vector<IntVec> pts = p.lattice_points();
  std::vector<std::vector<IntVec>> groups(r + 1);
  for (std::size_t idx = 0; idx < pts.size(); ++idx) {
    IntVec y = w.apply(pts[idx]);
    groups[s.labels[idx]].push_back(IntVec(y.begin(), y.begin() + (n - r)));
  }
  std::vector<LatticePolytope> summands;
  for (auto& g : groups) summands.emplace_back(n - r, std::move(g));

  IntMatrix winv = unimodular_inverse(w);
  IntVec tfull(n);
  for (std::size_t i = 0; i < r; ++i)
    tfull[n - r + i] = s.projection.translation[i];
  IntVec shift = winv.apply(tfull);
  for (Int& x : shift) x = -x;
  return {std::move(summands), AffineLatticeMap{std::move(winv),
                                                std::move(shift)}};
}

}  // namespace cayleykit
