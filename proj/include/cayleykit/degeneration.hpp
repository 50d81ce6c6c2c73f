#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cayleykit/cayley.hpp"
#include "cayleykit/polytope.hpp"

namespace cayleykit {

/// Failure of one stage of the witness pipeline. A stage failure is a
/// negative verdict (the plane is not a genuine witness), distinct from a
/// malformed-input error.
class StageError : public std::runtime_error {
public:
  StageError(std::string stage, const std::string& message)
      : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}

  const std::string& stage() const { return stage_; }

private:
  std::string stage_;
};

/// Spanning vectors a_1, ..., a_r of the r-plane 1_N + span(a_i) in the
/// projective chart indexed by the nonzero lattice points of P.
struct PlaneWitness {
  std::size_t point_count = 0;   // N
  std::vector<RatVec> vectors;   // r vectors of length N

  std::size_t rank() const { return vectors.size(); }

  friend bool operator==(const PlaneWitness&, const PlaneWitness&) = default;
};

/// Labels i_j of the points u_1, ..., u_N (0 = maps to the simplex origin).
struct LabelAssignment {
  std::size_t r = 0;
  std::vector<int> labels;  // length N, values in {0, ..., r}

  friend bool operator==(const LabelAssignment&,
                         const LabelAssignment&) = default;
};

/// Lattice points of P translated so the lexicographically minimal one is
/// the origin, plus the matrix of pi: Z^N -> Z^n, e_j -> u_j.
struct IndexedPointMap {
  IntVec base;                 // the original lex-min lattice point
  std::vector<IntVec> points;  // u_1, ..., u_N, translated, lex sorted
  IntMatrix pi;                // n x N, columns u_j
};

// Reduced row echelon basis of the same span (pivots not rescaled), rows
// reordered so the leading indices strictly decrease: condition (*) of the
// degeneration. Throws StageError("normalize-star") on dependent input.
PlaneWitness normalize_star(const PlaneWitness& w);

/// All intermediate families of the r-step degeneration, starting with the
/// input vectors; stage k pivots on vector r-k+1.
std::vector<std::vector<RatVec>> degeneration_steps(const PlaneWitness& w);

// Torus degeneration in closed form. One step with pivot a_p sends every
// other vector to its restriction off the pivot's support and the pivot to
// its support indicator:
//   a'_ij = a_ij if a_pj = 0, else 0   (i != p)
//   a'_pj = 0    if a_pj = 0, else 1
// Steps run over p = r, r-1, ..., 1. On input satisfying (*) in reduced
// echelon form the result is binary with pairwise disjoint nonempty supports
// and unchanged leading indices.
std::vector<IntVec> degenerate(const PlaneWitness& w);

/// Reads labels off binary vectors with disjoint supports: i_j = i when
/// vector i has a 1 in position j, else 0.
LabelAssignment labels_from_binary(const std::vector<IntVec>& binary);

/// mu: Z^N -> Z^r, e_j -> e_{i_j} (with e_0 = 0).
AffineLatticeMap label_map(const LabelAssignment& l);

IndexedPointMap point_index_map(const LatticePolytope& p);

// Solves for the lattice projection pi': Z^n -> Z^r with pi' . pi = mu. Per
// standard basis vector e_k the minimal m >= 1 with m e_k in pi(Z^N) comes
// from the Smith form of pi; column k of pi' is mu(u')/m for a preimage u'
// of m e_k. Divisibility or verification failure means the witness plane
// does not lie on the variety (StageError "pi-prime").
AffineLatticeMap solve_pi_prime(const IndexedPointMap& pm,
                                const AffineLatticeMap& mu);

/// Full pipeline: normalize_star -> degenerate -> labels -> solve_pi_prime,
/// assembled into a verified certificate (the base point maps to 0).
CayleyStructure recover_cayley(const LatticePolytope& p,
                               const PlaneWitness& w);

// Binary witness of a verified certificate: b_i indicates the lattice points
// labeled i, labels read relative to the base point's class (when the base
// point is not labeled 0, its class is swapped with 0 first; the witness
// determines labels only up to that choice). recover_cayley inverts this
// exactly on certificates whose base point is labeled 0.
PlaneWitness witness_from_cayley(const LatticePolytope& p,
                                 const CayleyStructure& s);

// Torus translate of the witness: replaces the basis by a g-recombination
// and divides componentwise by q = 1_N + sum_i s_i a_i, which must have no
// zero coordinate. The new witness spans q^{-1} . V.
PlaneWitness scramble(const PlaneWitness& w, const RatMatrix& g,
                      const RatVec& s);

}  // namespace cayleykit
