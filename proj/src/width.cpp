#include "cayleykit/width.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace cayleykit {

Int width_along(const LatticePolytope& p, const IntVec& v) {
  if (v.size() != p.ambient_dim())
    throw std::invalid_argument("dimension mismatch");
  bool zero = true;
  for (const Int& x : v)
    if (x != 0) zero = false;
  if (zero) throw std::invalid_argument("width direction must be nonzero");
  Int lo = dot(p.vertices().front(), v);
  Int hi = lo;
  for (const IntVec& u : p.vertices()) {
    Int val = dot(u, v);
    if (val < lo) lo = val;
    if (val > hi) hi = val;
  }
  return hi - lo;
}

namespace {

struct SearchFrame {
  IntMatrix diff;   // n x n, invertible
  RatMatrix inv;
  Int bound;        // w0
};

SearchFrame make_frame(const LatticePolytope& p) {
  const std::size_t n = p.ambient_dim();
  if (!p.is_full_dimensional())
    throw std::invalid_argument("polytope is not full-dimensional; restrict_to_affine_hull first");
  const auto& verts = p.vertices();

  std::vector<IntVec> rows;
  for (std::size_t i = 1; i < verts.size() && rows.size() < n; ++i) {
    IntVec d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = verts[i][j] - verts[0][j];
    rows.push_back(d);
    if (integer_rank(IntMatrix::from_rows(rows, n)) < rows.size())
      rows.pop_back();
  }
  if (rows.size() != n)
    throw std::invalid_argument("polytope is not full-dimensional; restrict_to_affine_hull first");

  Int w0 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n);
    e[i] = 1;
    Int w = width_along(p, e);
    if (i == 0 || w < w0) w0 = w;
  }
  IntMatrix diff = IntMatrix::from_rows(rows, n);
  RatMatrix inv = invert_rational(RatMatrix::from(diff));
  return {std::move(diff), std::move(inv), std::move(w0)};
}

// Integer direction D^{-1} c when it exists, already primitive and
// sign-canonical; nullopt for non-integral or zero candidates.
std::optional<IntVec> candidate_direction(const RatMatrix& inv,
                                          const IntVec& c) {
  RatVec q(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) q[i] = Rat(c[i]);
  RatVec v = inv.apply(q);
  IntVec vi(v.size());
  bool zero = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) return std::nullopt;
    vi[i] = v[i].get_num();
    if (vi[i] != 0) zero = false;
  }
  if (zero) return std::nullopt;
  make_primitive(vi);
  return vi;
}

template <typename Fn>
void scan_box(std::size_t n, const Int& radius, Fn&& fn) {
  IntVec c(n, -radius);
  if (n == 0) return;
  for (;;) {
    fn(c);
    std::size_t j = n;
    while (j > 0 && c[j - 1] == radius) --j;
    if (j == 0) return;
    ++c[j - 1];
    for (std::size_t k = j; k < n; ++k) c[k] = -radius;
  }
}

}  // namespace

WidthCertificate lattice_width(const LatticePolytope& p) {
  if (p.vertices().size() <= 1)
    throw std::invalid_argument("width of a single point is undefined");
  SearchFrame frame = make_frame(p);
  const std::size_t n = p.ambient_dim();

  std::optional<IntVec> best_dir;
  Int best = frame.bound;
  scan_box(n, frame.bound, [&](const IntVec& c) {
    for (const Int& x : c)
      if (x > best || -x > best) return;  // greedy shrink of the box
    auto v = candidate_direction(frame.inv, c);
    if (!v) return;
    Int w = width_along(p, *v);
    if (w < best || (w == best && (!best_dir || *v < *best_dir))) {
      best = w;
      best_dir = *v;
    }
  });
  // The coordinate direction realizing w0 is itself a candidate, so the scan
  // always finds at least one direction.
  return {std::move(*best_dir), std::move(best), std::move(frame.bound),
          std::move(frame.diff)};
}

std::vector<WidthOneDirection> width_one_directions(const LatticePolytope& p) {
  SearchFrame frame = make_frame(p);
  const std::size_t n = p.ambient_dim();

  std::vector<IntVec> dirs;
  scan_box(n, Int(1), [&](const IntVec& c) {
    auto v = candidate_direction(frame.inv, c);
    if (v && width_along(p, *v) == 1) dirs.push_back(std::move(*v));
  });
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

  std::vector<WidthOneDirection> out;
  for (IntVec& v : dirs) {
    Int lo = dot(p.vertices().front(), v);
    for (const IntVec& u : p.vertices()) {
      Int val = dot(u, v);
      if (val < lo) lo = val;
    }
    out.push_back({std::move(v), std::move(lo)});
  }
  return out;
}

}  // namespace cayleykit
