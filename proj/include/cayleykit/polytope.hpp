#pragma once

#include <cstddef>
#include <vector>

#include "cayleykit/exact_linalg.hpp"

namespace cayleykit {

/// Affine map x -> matrix*x + translation between lattices.
struct AffineLatticeMap {
  IntMatrix matrix;     // r x n
  IntVec translation;   // length r

  static AffineLatticeMap identity(std::size_t n);

  IntVec apply(const IntVec& x) const;

  /// True when the linear part is a surjection Z^n -> Z^r, i.e. all Smith
  /// invariant factors equal 1.
  bool is_lattice_projection() const;

  friend bool operator==(const AffineLatticeMap&,
                         const AffineLatticeMap&) = default;
};

/// Convex hull of finitely many integer points, with exact derived data.
///
/// Vertices and a facet description are computed once at construction; the
/// object is immutable afterwards and safe to share between threads. Facets
/// live in coordinates of the affine-hull lattice, so lower-dimensional
/// polytopes are fully supported.
class LatticePolytope {
public:
  struct Facet {
    IntVec normal;  // primitive, in hull coordinates
    Int offset;     // facet inequality: normal . c <= offset
  };

  LatticePolytope(std::size_t ambient_dim, std::vector<IntVec> points);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dimension() const { return dim_; }
  bool is_full_dimensional() const { return dim_ == ambient_; }

  /// Deduplicated, lexicographically sorted input points.
  const std::vector<IntVec>& generators() const { return points_; }

  /// Extreme points of the hull, lexicographically sorted.
  const std::vector<IntVec>& vertices() const { return vertices_; }

  bool contains(const IntVec& x) const;
  bool contains_rational(const RatVec& x) const;

  /// All integer points of the hull, lexicographically sorted. Computed by a
  /// bounding-box scan with exact membership tests on every call.
  std::vector<IntVec> lattice_points() const;

  // Affine-hull lattice data: points_[i] = base + hull_basis^T * hull_point(i).
  const IntVec& base_point() const { return base_; }
  const std::vector<IntVec>& hull_basis() const { return hull_basis_; }
  const std::vector<IntVec>& hull_points() const { return hull_points_; }
  const std::vector<Facet>& facets() const { return facets_; }

private:
  std::size_t ambient_ = 0;
  std::size_t dim_ = 0;
  std::vector<IntVec> points_;
  std::vector<IntVec> vertices_;
  IntVec base_;
  std::vector<IntVec> hull_basis_;   // dim_ rows of length ambient_
  std::vector<IntVec> hull_points_;  // aligned with points_, length dim_
  std::vector<Facet> facets_;
};

LatticePolytope dilate(const LatticePolytope& p, const Int& k);

/// Cayley sum: summand i is embedded at height e_i (e_0 = 0) in r extra
/// coordinates.
LatticePolytope cayley_sum(const std::vector<LatticePolytope>& summands);

LatticePolytope apply_map(const AffineLatticeMap& f, const LatticePolytope& p);

/// True iff p is a full-dimensional simplex whose edge vectors at a vertex
/// form a basis of the ambient lattice.
bool is_unimodular_simplex(const LatticePolytope& p);

struct RestrictResult {
  LatticePolytope polytope;    // full-dimensional copy in hull coordinates
  AffineLatticeMap embedding;  // maps hull coordinates back to the ambient
};

/// Rewrites p in the lattice of its affine hull. The embedding reconstructs
/// the original points: embedding(hull point) = original point.
RestrictResult restrict_to_affine_hull(const LatticePolytope& p);

}  // namespace cayleykit
