#include "cayleykit/toric.hpp"

#include <stdexcept>

#include "cayleykit/cayley.hpp"

namespace cayleykit {

Int ehrhart_count(const LatticePolytope& p, const Int& k) {
  if (k < 0) throw std::invalid_argument("dilation factor must be >= 0");
  return Int(dilate(p, k).lattice_points().size());
}

std::vector<EhrhartSample> ehrhart_profile(const LatticePolytope& p,
                                           unsigned long kmax) {
  std::vector<EhrhartSample> out;
  for (unsigned long k = 0; k <= kmax; ++k)
    out.push_back({Int(k), ehrhart_count(p, Int(k))});
  return out;
}

Int normalized_volume(const LatticePolytope& p) {
  if (!p.is_full_dimensional())
    throw std::invalid_argument("polytope is not full-dimensional; restrict_to_affine_hull first");
  const unsigned long n = p.ambient_dim();
  Int vol = 0;
  for (unsigned long i = 0; i <= n; ++i) {
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, i);
    Int term = binom * ehrhart_count(p, Int(i));
    if ((n - i) % 2 == 0)
      vol += term;
    else
      vol -= term;
  }
  return vol;
}

std::optional<Int> spanned_lattice_index(const LatticePolytope& p) {
  std::vector<IntVec> pts = p.lattice_points();
  const std::size_t n = p.ambient_dim();
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IntVec d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return lattice_index(diffs, n);
}

bool seshadri_is_one(const LatticePolytope& p) {
  return find_cayley_structure(p, 1).has_value();
}

}  // namespace cayleykit
