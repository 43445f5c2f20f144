#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "wallkit/discriminant.hpp"
#include "wallkit/integer.hpp"
#include "wallkit/lattice.hpp"

namespace wallkit {

// Integer matrix acting on coordinate columns, certified at construction to
// preserve the Gram matrix: M^T G M = G.
class Isometry {
 public:
  Isometry(LatticePtr lattice, IntMatrix matrix);

  static Isometry identity(LatticePtr lattice);

  LatticePtr const& lattice() const { return lattice_; }
  IntMatrix const& matrix() const { return matrix_; }
  bool is_identity() const;

  friend bool operator==(Isometry const& a, Isometry const& b);

 private:
  LatticePtr lattice_;
  IntMatrix matrix_;
};

// True iff lambda -> lambda - 2 (lambda, x) / q(x) x maps the lattice into
// itself, checked on every basis vector.
bool is_reflection_integral(LatticeVector const& x);

// Reflection in x (norm(x) < 0). Throws ZeroNorm / NonIntegral.
Isometry reflection(LatticeVector const& x);

// compose(a, b) = a o b.
Isometry compose(Isometry const& a, Isometry const& b);
Isometry inverse(Isometry const& iso);
LatticeVector apply(Isometry const& iso, LatticeVector const& v);

// Permutation of the group elements (by DiscriminantGroup index) induced by
// the isometry.
std::vector<std::size_t> induced_disc_action(DiscriminantGroup const& group,
                                             Isometry const& iso);

// x -> x + (x,e) a - (x,a) e - (a,a)/2 (x,e) e for e isotropic and primitive
// inside a hyperbolic-plane block, a orthogonal to e, on an even lattice.
Isometry eichler_transvection(LatticeVector const& e, LatticeVector const& a);

// An isometry phi, built from Eichler transvections, with phi(v) = w and
// trivial action on the discriminant group. Requires two blocks isometric to
// U (Gram [[0,1],[1,0]]); the first two such blocks are used.
// Throws NoUSquare, PreconditionViolated or InvariantMismatch (the message
// names the failing conditions among square / divisibility / residue).
Isometry eichler_normalize(LatticeVector const& v, LatticeVector const& w);

// The normal form eichler_normalize reduces to; two admissible vectors share
// it iff their square, divisibility and residue agree.
LatticeVector eichler_normal_form(LatticeVector const& v);

// Orbit partition of {0, ..., domain_size-1} under the group generated by
// the permutations. Orbits are sorted internally and ordered by their
// smallest element.
std::vector<std::vector<std::size_t>> orbits(
    std::vector<std::vector<std::size_t>> const& generators, std::size_t domain_size);

// Reflections in the eight basis vectors of an E8(-1) or E8(-2) block.
std::vector<Isometry> e8_simple_root_reflections(LatticePtr const& lattice,
                                                 std::string_view block);

}  // namespace wallkit
