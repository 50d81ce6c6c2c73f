#pragma once

#include <vector>

#include "cayleykit/polytope.hpp"

namespace cayleykit {

/// Optimal direction together with the data proving the search exhaustive.
struct WidthCertificate {
  IntVec direction;  // primitive, first nonzero entry positive
  Int value;
  Int initial_bound;          // w0 = best width over coordinate directions
  IntMatrix difference_basis; // rows: affinely independent vertex differences
};

/// max - min of <., v> over the polytope. v must be nonzero.
Int width_along(const LatticePolytope& p, const IntVec& v);

// Exact lattice width.
//
// Soundness of the finite candidate set: each row d_k of the difference
// basis D joins two points of P, so for every integer direction v the value
// <d_k, v> is an integer of absolute value at most width(P, v). Hence any
// direction beating the running bound w satisfies ||D v||_inf <= w, and
// scanning v = D^{-1} c over integer c with ||c||_inf <= w is exhaustive.
// Ties are broken by the lexicographically smallest canonical direction.
WidthCertificate lattice_width(const LatticePolytope& p);

struct WidthOneDirection {
  IntVec direction;  // primitive, first nonzero entry positive
  Int offset;        // min of <., direction> over P, so values lie in
                     // [offset, offset + 1]
};

/// Complete list of width-one directions, deduplicated up to sign and sorted
/// lexicographically.
std::vector<WidthOneDirection> width_one_directions(const LatticePolytope& p);

}  // namespace cayleykit
