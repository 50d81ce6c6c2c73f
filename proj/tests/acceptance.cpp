// Acceptance suite: one timed pass/fail line per criterion, nonzero exit on
// any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cayleykit/degeneration.hpp"
#include "cayleykit/toric.hpp"
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

std::size_t lead(const RatVec& v) {
  std::size_t j = 0;
  while (j < v.size() && v[j] == 0) ++j;
  return j;
}

Int width_direction_bound(const LatticePolytope& p) {
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
  RatMatrix inv =
      invert_rational(RatMatrix::from(IntMatrix::from_rows(rows, n)));
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

RatMatrix random_invertible_rational(std::mt19937_64& rng, std::size_t r) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  for (;;) {
    RatMatrix g(r, r);
    std::vector<RatVec> rows;
    for (std::size_t i = 0; i < r; ++i) {
      RatVec row(r);
      for (std::size_t j = 0; j < r; ++j) {
        row[j] = Rat(num(rng), den(rng));
        row[j].canonicalize();
        g(i, j) = row[j];
      }
      rows.push_back(row);
    }
    if (rational_rank(rows) == r) return g;
  }
}

bool criterion1(std::string& why) {
  const LatticePolytope p = index_two_simplex();
  if (find_cayley_structure(p, 3)) {
    why = "a length-4 structure was unexpectedly found";
    return false;
  }
  if (max_cayley_length(p) != 2) {
    why = "max Cayley length is not 2";
    return false;
  }
  if (spanned_lattice_index(p) != Int(2)) {
    why = "spanned lattice index is not 2";
    return false;
  }
  if (normalized_volume(p) != 2) {
    why = "normalized volume is not 2";
    return false;
  }
  return true;
}

bool criterion2(std::string& why) {
  const LatticePolytope sq = unit_square();
  if (max_cayley_length(sq) < 2) {
    why = "max_cayley_length(square) < 2";
    return false;
  }
  if (lattice_width(sq).value != 1) {
    why = "lattice_width(square) != 1";
    return false;
  }
  if (!seshadri_is_one(sq)) {
    why = "seshadri_is_one(square) is false";
    return false;
  }
  return true;
}

bool criterion3(std::string& why) {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + t % 3;
    auto p = oracles::random_full_dim_polytope(rng, n, 0, 3, n + 3);
    bool width_one = lattice_width(p).value == 1;
    bool cayley_two = find_cayley_structure(p, 1).has_value();
    bool seshadri = seshadri_is_one(p);
    if (width_one != cayley_two || cayley_two != seshadri) {
      std::ostringstream os;
      os << "discrepancy at sample " << t << ": width-one=" << width_one
         << " cayley=" << cayley_two << " seshadri=" << seshadri;
      why = os.str();
      return false;
    }
  }
  return true;
}

bool criterion4(std::string& why) {
  std::mt19937_64 rng(104);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + t % 3;
    auto p = oracles::random_full_dim_polytope(rng, n, 0, 4, n + 3);
    WidthCertificate cert = lattice_width(p);
    auto brute =
        oracles::brute_force_width(p.vertices(), width_direction_bound(p));
    if (cert.value != brute.value ||
        width_along(p, cert.direction) != cert.value ||
        width_along(p, brute.direction) != brute.value) {
      std::ostringstream os;
      os << "width mismatch at sample " << t << ": search "
         << cert.value.get_str() << ", brute force " << brute.value.get_str();
      why = os.str();
      return false;
    }
  }
  return true;
}

bool criterion5(std::string& why) {
  std::mt19937_64 rng(105);
  for (int t = 0; t < 100; ++t) {
    std::size_t s = 1 + t % 2;
    std::size_t r = 1 + t % 3;
    LatticePolytope sum =
        cayley_sum(oracles::random_cayley_summands(rng, s, r));
    CayleyStructure cert = oracles::defining_structure(sum, s, r);
    PlaneWitness w = witness_from_cayley(sum, cert);

    RatMatrix g = random_invertible_rational(rng, r);
    RatVec shift;
    for (;;) {
      shift = oracles::random_rational_vector(rng, r, 2, 2);
      bool ok = true;
      for (std::size_t j = 0; j < w.point_count && ok; ++j) {
        Rat q(1);
        for (std::size_t i = 0; i < r; ++i) q += shift[i] * w.vectors[i][j];
        if (q == 0) ok = false;
      }
      if (ok) break;
    }
    PlaneWitness scrambled = scramble(w, g, shift);

    try {
      CayleyStructure back = recover_cayley(sum, scrambled);
      if (!verify_cayley_structure(sum, back).ok) {
        why = "recovered certificate failed verification";
        return false;
      }
      // pi' . pi = mu on every generator e_j
      AffineLatticeMap mu = label_map(
          labels_from_binary(degenerate(normalize_star(scrambled))));
      IndexedPointMap pm = point_index_map(sum);
      for (std::size_t j = 0; j < pm.points.size(); ++j)
        if (back.projection.matrix.apply(pm.points[j]) != mu.matrix.col(j)) {
          why = "pi' . pi != mu";
          return false;
        }
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "pipeline failed at sample " << t << ": " << e.what();
      why = os.str();
      return false;
    }
  }
  return true;
}

bool criterion6(std::string& why) {
  std::mt19937_64 rng(106);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + t % 3;
    std::size_t n = r + 1 + t % 9;  // N <= 12
    PlaneWitness w = normalize_star(oracles::random_witness(rng, r, n));
    try {
      auto stages = degeneration_steps(w);
      for (const auto& stage : stages)
        if (rational_rank(stage) != r) {
          why = "intermediate family lost independence";
          return false;
        }
      for (std::size_t i = 0; i < r; ++i)
        if (lead(stages.back()[i]) != lead(stages.front()[i])) {
          why = "leading index moved";
          return false;
        }
      std::vector<bool> seen(n, false);
      for (const RatVec& b : stages.back()) {
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
          if (b[j] == 0) continue;
          if (b[j] != 1) {
            why = "output not binary";
            return false;
          }
          if (seen[j]) {
            why = "supports overlap";
            return false;
          }
          seen[j] = true;
          nonzero = true;
        }
        if (!nonzero) {
          why = "empty support";
          return false;
        }
      }
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "degeneration failed at sample " << t << ": " << e.what();
      why = os.str();
      return false;
    }
  }
  return true;
}

bool criterion7(std::string& why) {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 1 + t % 3;
    auto p = oracles::random_full_dim_polytope(rng, n, 0, 3, n + 3);
    std::vector<Int> diff;
    for (unsigned long k = 0; k <= n + 4; ++k)
      diff.push_back(ehrhart_count(p, Int(k)));
    for (std::size_t round = 0; round <= n; ++round)
      for (std::size_t i = 0; i + 1 < diff.size(); ++i)
        diff[i] = diff[i + 1] - diff[i];
    for (std::size_t i = 0; i + n + 1 < n + 5; ++i)
      if (diff[i] != 0) {
        why = "(n+1)-th finite difference did not vanish";
        return false;
      }
    Int expected = normalized_volume(p);
    for (std::size_t i = 0; i < n; ++i) expected *= 2;
    if (normalized_volume(dilate(p, 2)) != expected) {
      why = "normalized volume did not scale by 2^n";
      return false;
    }
  }
  return true;
}

bool criterion8(std::string& why) {
  std::mt19937_64 rng(108);
  for (int t = 0; t < 50; ++t) {
    std::size_t s = 1 + t % 2;
    std::size_t r = 1 + t % 3;
    LatticePolytope sum =
        cayley_sum(oracles::random_cayley_summands(rng, s, r));
    if (lattice_width(sum).value != 1) {
      std::ostringstream os;
      os << "Cayley sum of width != 1 at sample " << t;
      why = os.str();
      return false;
    }
  }
  return true;
}

struct Criterion {
  int id;
  const char* description;
  double limit_seconds;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "index-two simplex: no length-4 structure, max length 2, span index 2, "
          "normalized volume 2",
       1.0, criterion1},
      {2, "unit square: Cayley length >= 2, lattice width 1, Seshadri one",
       1.0, criterion2},
      {3, "width-one / Cayley length-2 / Seshadri equivalence on 200 random "
          "polytopes",
       60.0, criterion3},
      {4, "lattice width equals the brute-force box scan on 100 random "
          "polytopes",
       60.0, criterion4},
      {5, "witness -> scramble -> recover round trip on 100 random Cayley "
          "sums",
       120.0, criterion5},
      {6, "degeneration postconditions on 200 random witnesses", 30.0,
       criterion6},
      {7, "Ehrhart polynomiality and volume scaling on 50 random polytopes",
       60.0, criterion7},
      {8, "Cayley sums have lattice width one (50 random families)", 30.0,
       criterion8},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && elapsed > c.limit_seconds) {
      ok = false;
      why = "time limit exceeded";
    }
    std::printf("[%s] criterion %d: %s (%.2fs%s)\n", ok ? "PASS" : "FAIL",
                c.id, c.description, elapsed,
                why.empty() ? "" : (" — " + why).c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
