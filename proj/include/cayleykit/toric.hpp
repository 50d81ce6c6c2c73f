#pragma once

#include <optional>
#include <vector>

#include "cayleykit/polytope.hpp"

namespace cayleykit {

/// One graded piece of the semigroup of (X_P, L_P): the count #(kP cap Z^n).
struct EhrhartSample {
  Int k;
  Int count;
};

Int ehrhart_count(const LatticePolytope& p, const Int& k);

std::vector<EhrhartSample> ehrhart_profile(const LatticePolytope& p,
                                           unsigned long kmax);

/// n! vol(P), via the n-th finite difference of k -> #(kP cap Z^n) at 0.
Int normalized_volume(const LatticePolytope& p);

/// Index of the lattice spanned by {u - u_0 : u in P cap Z^n}; nullopt when
/// the lattice points do not affinely span.
std::optional<Int> spanned_lattice_index(const LatticePolytope& p);

/// Whether the Seshadri constant of (X_P, L_P) at a very general point is 1,
/// equivalently whether P is a Cayley polytope of length 2. Decided through
/// the Cayley search so it cross-checks the width module.
bool seshadri_is_one(const LatticePolytope& p);

}  // namespace cayleykit
