#include "cayleykit/degeneration.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace cayleykit {

namespace {

std::size_t leading_index(const RatVec& v) {
  std::size_t j = 0;
  while (j < v.size() && v[j] == 0) ++j;
  return j;  // v.size() for the zero vector
}

void check_witness_shape(const PlaneWitness& w) {
  if (w.vectors.empty()) throw std::invalid_argument("witness has no vectors");
  for (const RatVec& v : w.vectors)
    if (v.size() != w.point_count)
      throw std::invalid_argument("witness vector length mismatch");
}

}  // namespace

PlaneWitness normalize_star(const PlaneWitness& w) {
  check_witness_shape(w);
  std::vector<RatVec> rows = w.vectors;
  const std::size_t r = rows.size();
  const std::size_t n = w.point_count;

  // Row echelon with cleared pivot columns; pivots keep their scale.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < r; ++col) {
    std::size_t pivot = rank;
    while (pivot < r && rows[pivot][col] == 0) ++pivot;
    if (pivot == r) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rat f = rows[i][col] / rows[rank][col];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  if (rank < r) throw StageError("normalize-star", "dependent");

  std::sort(rows.begin(), rows.end(), [](const RatVec& a, const RatVec& b) {
    return leading_index(a) > leading_index(b);
  });
  return {w.point_count, std::move(rows)};
}

std::vector<std::vector<RatVec>> degeneration_steps(const PlaneWitness& w) {
  check_witness_shape(w);
  const std::size_t r = w.vectors.size();
  const std::size_t n = w.point_count;
  if (leading_index(w.vectors[0]) == n)
    throw StageError("degenerate", "condition (*) violated");
  for (std::size_t i = 0; i + 1 < r; ++i)
    if (leading_index(w.vectors[i]) <= leading_index(w.vectors[i + 1]))
      throw StageError("degenerate", "condition (*) violated");

  std::vector<std::vector<RatVec>> stages{w.vectors};
  std::vector<RatVec> cur = w.vectors;
  for (std::size_t step = 0; step < r; ++step) {
    const std::size_t p = r - 1 - step;
    const RatVec pivot = cur[p];
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == p)
          cur[i][j] = pivot[j] == 0 ? Rat(0) : Rat(1);
        else if (pivot[j] != 0)
          cur[i][j] = 0;
      }
      if (leading_index(cur[i]) == n)
        throw StageError("degenerate", "vector vanished during degeneration");
    }
    stages.push_back(cur);
  }
  return stages;
}

std::vector<IntVec> degenerate(const PlaneWitness& w) {
  std::vector<RatVec> last = degeneration_steps(w).back();
  std::vector<IntVec> out;
  for (const RatVec& v : last) {
    IntVec b(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) b[j] = v[j].get_num();
    out.push_back(std::move(b));
  }
  return out;
}

LabelAssignment labels_from_binary(const std::vector<IntVec>& binary) {
  if (binary.empty()) throw std::invalid_argument("no binary vectors");
  const std::size_t n = binary.front().size();
  LabelAssignment l{binary.size(), std::vector<int>(n, 0)};
  for (std::size_t i = 0; i < binary.size(); ++i) {
    if (binary[i].size() != n)
      throw std::invalid_argument("binary vector length mismatch");
    for (std::size_t j = 0; j < n; ++j) {
      if (binary[i][j] == 0) continue;
      if (binary[i][j] != 1)
        throw std::invalid_argument("vector entries must be 0 or 1");
      if (l.labels[j] != 0)
        throw std::invalid_argument("overlapping supports");
      l.labels[j] = static_cast<int>(i) + 1;
    }
  }
  return l;
}

AffineLatticeMap label_map(const LabelAssignment& l) {
  IntMatrix m(l.r, l.labels.size());
  for (std::size_t j = 0; j < l.labels.size(); ++j)
    if (l.labels[j] != 0) m(l.labels[j] - 1, j) = 1;
  return {std::move(m), IntVec(l.r)};
}

IndexedPointMap point_index_map(const LatticePolytope& p) {
  if (!p.is_full_dimensional())
    throw std::invalid_argument("polytope is not full-dimensional; restrict_to_affine_hull first");
  std::vector<IntVec> pts = p.lattice_points();
  IndexedPointMap pm;
  pm.base = pts.front();  // lex-min lattice point; a vertex of P
  const std::size_t n = p.ambient_dim();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IntVec u(n);
    for (std::size_t j = 0; j < n; ++j) u[j] = pts[i][j] - pm.base[j];
    pm.points.push_back(std::move(u));
  }
  pm.pi = IntMatrix::from_cols(pm.points, n);
  return pm;
}

AffineLatticeMap solve_pi_prime(const IndexedPointMap& pm,
                                const AffineLatticeMap& mu) {
  const std::size_t n = pm.pi.rows();
  const std::size_t bign = pm.pi.cols();
  const std::size_t r = mu.matrix.rows();
  if (mu.matrix.cols() != bign)
    throw std::invalid_argument("label map length mismatch");

  auto [u, d, v] = smith_normal_form(pm.pi);
  for (std::size_t i = 0; i < n; ++i)
    if (i >= std::min(d.rows(), d.cols()) || d(i, i) == 0)
      throw std::invalid_argument("point lattice has deficient rank");

  IntMatrix pi_prime(r, n);
  for (std::size_t k = 0; k < n; ++k) {
    // Minimal m with m e_k in the column lattice of pi.
    Int m = 1;
    for (std::size_t i = 0; i < n; ++i) {
      Int g;
      mpz_gcd(g.get_mpz_t(), d(i, i).get_mpz_t(), u(i, k).get_mpz_t());
      Int step;
      mpz_divexact(step.get_mpz_t(), d(i, i).get_mpz_t(), g.get_mpz_t());
      mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), step.get_mpz_t());
    }
    // Preimage u' of m e_k via the same Smith data (free coordinates zero).
    IntVec y(bign);
    for (std::size_t i = 0; i < n; ++i) {
      Int num = m * u(i, k);
      mpz_divexact(y[i].get_mpz_t(), num.get_mpz_t(), d(i, i).get_mpz_t());
    }
    IntVec uprime = v.apply(y);
    IntVec w = mu.matrix.apply(uprime);
    for (std::size_t i = 0; i < r; ++i) {
      if (!mpz_divisible_p(w[i].get_mpz_t(), m.get_mpz_t()))
        throw StageError("pi-prime", "divisibility failed");
      mpz_divexact(pi_prime(i, k).get_mpz_t(), w[i].get_mpz_t(),
                   m.get_mpz_t());
    }
  }

  for (std::size_t j = 0; j < bign; ++j)
    if (pi_prime.apply(pm.points[j]) != mu.matrix.col(j))
      throw StageError("pi-prime", "verification failed");
  AffineLatticeMap out{std::move(pi_prime), IntVec(r)};
  if (!out.is_lattice_projection())
    throw StageError("pi-prime", "projection not surjective");
  return out;
}

CayleyStructure recover_cayley(const LatticePolytope& p,
                               const PlaneWitness& w) {
  IndexedPointMap pm = point_index_map(p);
  if (w.point_count != pm.points.size())
    throw std::invalid_argument(
        "witness length does not match the lattice point count");

  PlaneWitness nw = normalize_star(w);
  std::vector<IntVec> bins = degenerate(nw);
  LabelAssignment la = labels_from_binary(bins);
  AffineLatticeMap mu = label_map(la);
  AffineLatticeMap pp = solve_pi_prime(pm, mu);

  const std::size_t r = la.r;
  IntVec trans = pp.matrix.apply(pm.base);
  for (Int& x : trans) x = -x;

  std::vector<int> labels(1 + la.labels.size());
  labels[0] = 0;
  std::copy(la.labels.begin(), la.labels.end(), labels.begin() + 1);

  CayleyStructure s{r, AffineLatticeMap{pp.matrix, std::move(trans)},
                    std::move(labels)};
  VerifyResult vr = verify_cayley_structure(p, s);
  if (!vr) throw StageError("verify", vr.reason);
  return s;
}

PlaneWitness witness_from_cayley(const LatticePolytope& p,
                                 const CayleyStructure& s) {
  VerifyResult vr = verify_cayley_structure(p, s);
  if (!vr) throw std::invalid_argument("invalid certificate: " + vr.reason);

  std::vector<int> labels = s.labels;  // aligned with lex-sorted points
  const int base_label = labels.front();
  if (base_label != 0)
    for (int& l : labels) {
      if (l == base_label)
        l = 0;
      else if (l == 0)
        l = base_label;
    }

  const std::size_t n_pts = labels.size() - 1;
  std::vector<RatVec> vectors(s.r, RatVec(n_pts));
  for (std::size_t j = 0; j < n_pts; ++j)
    if (labels[j + 1] != 0) vectors[labels[j + 1] - 1][j] = 1;
  return {n_pts, std::move(vectors)};
}

PlaneWitness scramble(const PlaneWitness& w, const RatMatrix& g,
                      const RatVec& s) {
  check_witness_shape(w);
  const std::size_t r = w.vectors.size();
  const std::size_t n = w.point_count;
  if (g.rows() != r || g.cols() != r || s.size() != r)
    throw std::invalid_argument("scramble dimension mismatch");
  {
    std::vector<RatVec> grows;
    for (std::size_t i = 0; i < r; ++i) {
      RatVec row(r);
      for (std::size_t j = 0; j < r; ++j) row[j] = g(i, j);
      grows.push_back(std::move(row));
    }
    if (rational_rank(grows) != r)
      throw std::invalid_argument("recombination matrix is singular");
  }

  RatVec q(n, Rat(1));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < r; ++i) q[j] += s[i] * w.vectors[i][j];
  for (const Rat& x : q)
    if (x == 0)
      throw std::invalid_argument("torus point has a zero coordinate");

  std::vector<RatVec> out(r, RatVec(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat acc;
      for (std::size_t k = 0; k < r; ++k) acc += g(i, k) * w.vectors[k][j];
      out[i][j] = acc / q[j];
    }
  return {n, std::move(out)};
}

}  // namespace cayleykit
