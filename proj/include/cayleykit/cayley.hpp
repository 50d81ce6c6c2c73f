#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cayleykit/polytope.hpp"

namespace cayleykit {

/// Certificate that P is a Cayley polytope of length r+1: a lattice
/// projection mapping P onto the standard r-simplex, plus the label of every
/// lattice point (which standard vertex it maps to, 0 for the origin).
struct CayleyStructure {
  std::size_t r = 0;
  AffineLatticeMap projection;  // r x n matrix + translation
  std::vector<int> labels;      // aligned with lex-sorted lattice points of P

  friend bool operator==(const CayleyStructure&,
                         const CayleyStructure&) = default;
};

// Decides whether P is a Cayley polytope of length r+1. The search runs over
// r-subsets of the {0,1}-valued functionals built from the width-one
// directions (each direction yields <v,x> - min and its complement; a valid
// certificate may need either sign). A subset is a certificate iff no vertex
// takes value 1 under two of its functionals and some vertex takes value 0
// under all of them. Atoms are scanned with canonical-sign directions first
// in lexicographic order, so the result is the minimal certificate in that
// order; nullopt certifies that no structure of length r+1 exists.
std::optional<CayleyStructure> find_cayley_structure(const LatticePolytope& p,
                                                     std::size_t r);

/// Largest r+1 for which find_cayley_structure succeeds; 1 when P has no
/// width-one direction.
std::size_t max_cayley_length(const LatticePolytope& p);

struct VerifyResult {
  bool ok = false;
  std::string reason;  // first failed invariant; empty when ok

  explicit operator bool() const { return ok; }
};

/// Re-checks every certificate invariant from scratch.
VerifyResult verify_cayley_structure(const LatticePolytope& p,
                                     const CayleyStructure& s);

struct CayleyDecomposition {
  std::vector<LatticePolytope> summands;  // P_0, ..., P_r in Z^{n-r}
  AffineLatticeMap iso;  // maps the Cayley sum of the summands back onto P
};

/// Splits P along a verified certificate: completes the projection to a
/// unimodular change of coordinates and reads the summands off the fibers.
CayleyDecomposition extract_summands(const LatticePolytope& p,
                                     const CayleyStructure& s);

}  // namespace cayleykit
