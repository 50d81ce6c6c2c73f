#include <doctest.h>

#include <random>

#include "cayleykit/width.hpp"
#include "oracles.hpp"

using namespace cayleykit;

namespace {

LatticePolytope unit_square() {
  return LatticePolytope(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

LatticePolytope index_two_simplex() {
  return LatticePolytope(3, {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
}

LatticePolytope double_triangle() {
  return LatticePolytope(2, {{0, 0}, {2, 0}, {0, 2}});
}

// Upper bound ||v||_inf <= w0 * max row abs sum of D^{-1} for any optimal v,
// derived with the oracle's own difference matrix.
Int oracle_direction_bound(const LatticePolytope& p) {
  const std::size_t n = p.ambient_dim();
  const auto& verts = p.vertices();
  std::vector<IntVec> rows;
  for (std::size_t i = 1; i < verts.size() && rows.size() < n; ++i) {
    IntVec d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = verts[i][j] - verts[0][j];
    rows.push_back(d);
    if (integer_rank(IntMatrix::from_rows(rows, n)) < rows.size())
      rows.pop_back();
  }
  RatMatrix inv = invert_rational(RatMatrix::from(IntMatrix::from_rows(rows, n)));
  Rat norm = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < n; ++j) s += abs(inv(i, j));
    if (s > norm) norm = s;
  }
  Int w0 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n);
    e[i] = 1;
    Int w = width_along(p, e);
    if (i == 0 || w < w0) w0 = w;
  }
  Rat bound = Rat(w0) * norm;
  Int b;
  mpz_cdiv_q(b.get_mpz_t(), bound.get_num().get_mpz_t(),
             bound.get_den().get_mpz_t());
  return b;
}

}  // namespace

TEST_CASE("width_along") {
  CHECK(width_along(unit_square(), {Int(1), Int(0)}) == 1);
  CHECK(width_along(index_two_simplex(), {Int(0), Int(0), Int(1)}) == 1);
  CHECK(width_along(index_two_simplex(), {Int(0), Int(1), Int(-1)}) == 2);
  CHECK_THROWS_AS(width_along(unit_square(), {Int(0), Int(0)}),
                  std::invalid_argument);
}

TEST_CASE("lattice_width on fixtures") {
  SUBCASE("unit square") {
    WidthCertificate c = lattice_width(unit_square());
    CHECK(c.value == 1);
    CHECK(c.direction == IntVec{0, 1});  // lex-smaller than (1,0)
    CHECK(width_along(unit_square(), c.direction) == c.value);
  }
  SUBCASE("index-two simplex") {
    WidthCertificate c = lattice_width(index_two_simplex());
    CHECK(c.value == 1);
    CHECK(c.direction == IntVec{0, 0, 1});
  }
  SUBCASE("2 * triangle") {
    WidthCertificate c = lattice_width(double_triangle());
    CHECK(c.value == 2);
    CHECK(c.direction == IntVec{0, 1});
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(lattice_width(LatticePolytope(2, {{0, 0}, {1, 1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(lattice_width(LatticePolytope(1, {{4}})),
                    std::invalid_argument);
  }
}

TEST_CASE("width_one_directions on fixtures") {
  SUBCASE("unit square") {
    auto dirs = width_one_directions(unit_square());
    REQUIRE(dirs.size() == 2);
    CHECK(dirs[0].direction == IntVec{0, 1});
    CHECK(dirs[0].offset == 0);
    CHECK(dirs[1].direction == IntVec{1, 0});
    CHECK(dirs[1].offset == 0);
  }
  SUBCASE("index-two simplex") {
    auto dirs = width_one_directions(index_two_simplex());
    REQUIRE(dirs.size() == 3);
    CHECK(dirs[0].direction == IntVec{0, 0, 1});
    CHECK(dirs[1].direction == IntVec{0, 1, 0});
    CHECK(dirs[2].direction == IntVec{1, 0, 0});
    for (const auto& d : dirs) CHECK(d.offset == 0);
  }
  SUBCASE("2 * triangle has none") {
    CHECK(width_one_directions(double_triangle()).empty());
  }
}

TEST_CASE("width oracle equivalence on random polytopes") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + t % 3;
    auto p = oracles::random_full_dim_polytope(rng, n, 0, 4, n + 3);
    WidthCertificate c = lattice_width(p);
    auto brute = oracles::brute_force_width(p.vertices(),
                                            oracle_direction_bound(p));
    CHECK(c.value == brute.value);
    CHECK(c.direction == brute.direction);
    CHECK(width_along(p, c.direction) == c.value);
  }
}

TEST_CASE("width is invariant under unimodular affine maps") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> shift(-3, 3);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 1 + t % 3;
    auto p = oracles::random_full_dim_polytope(rng, n, 0, 3, n + 3);
    IntMatrix u = oracles::random_unimodular(rng, n);
    IntVec tr(n);
    for (auto& x : tr) x = shift(rng);
    LatticePolytope q = apply_map({u, tr}, p);
    CHECK(lattice_width(q).value == lattice_width(p).value);
  }
}

TEST_CASE("width_one_directions matches the exhaustive filter") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 25; ++t) {
    std::size_t n = 1 + t % 3;
    auto p = oracles::random_full_dim_polytope(rng, n, 0, 4, n + 3);
    auto dirs = width_one_directions(p);
    // oracle: scan the full direction box for canonical width-1 directions
    Int bound = oracle_direction_bound(p);
    std::vector<IntVec> expect;
    IntVec v(n, -bound);
    for (;;) {
      IntVec canon = v;
      make_primitive(canon);
      if (canon == v && vector_gcd(v) != 0 && width_along(p, v) == 1)
        expect.push_back(v);
      std::size_t j = n;
      while (j > 0 && v[j - 1] == bound) --j;
      if (j == 0) break;
      ++v[j - 1];
      for (std::size_t k = j; k < n; ++k) v[k] = -bound;
    }
    std::vector<IntVec> got;
    for (const auto& d : dirs) got.push_back(d.direction);
    CHECK(got == expect);
    for (const auto& d : dirs) {
      Int lo = dot(p.vertices().front(), d.direction);
      for (const IntVec& u : p.vertices()) {
        Int val = dot(u, d.direction);
        if (val < lo) lo = val;
      }
      CHECK(d.offset == lo);
    }
  }
}

TEST_CASE("Cayley sums have width one") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 20; ++t) {
    std::size_t s = 1 + t % 2, r = 1 + t % 3;
    LatticePolytope sum =
        cayley_sum(oracles::random_cayley_summands(rng, s, r));
    CHECK(lattice_width(sum).value == 1);
  }
}
