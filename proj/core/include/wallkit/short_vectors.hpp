#pragma once

#include <set>
#include <vector>

#include "wallkit/integer.hpp"
#include "wallkit/lattice.hpp"

namespace wallkit {

// All vectors v of a negative definite lattice with norm(v) in `norms`
// (every entry negative), each exactly once, sorted lexicographically by
// coordinates. Fincke-Pohst enumeration over exact rationals on the negated
// Gram matrix. Throws NotNegativeDefinite otherwise.
std::vector<LatticeVector> short_vectors(LatticePtr const& lattice,
                                         std::set<Integer> const& norms);

// Same enumeration on a bare negative definite Gram matrix, returning
// coordinate vectors.
std::vector<IntVector> short_vectors(IntMatrix const& gram, std::set<Integer> const& norms);

}  // namespace wallkit
