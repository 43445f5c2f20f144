#pragma once

#include <cstddef>
#include <vector>

#include "wallkit/integer.hpp"
#include "wallkit/lattice.hpp"

namespace wallkit {

// An element of a discriminant group, as coefficients of the generators
// (residues modulo the invariant factors).
struct DiscElement {
  IntVector residues;

  bool is_zero() const;
  friend bool operator==(DiscElement const&, DiscElement const&) = default;
};

// The finite group L^v / L with its discriminant quadratic form.
//
// Dual vectors x (rational coordinates) are tracked through their pairing
// vectors y = gram * x in Z^n; with U * gram * V = diag(d) the class of x is
// (U y) mod d on the coordinates where d > 1.
class DiscriminantGroup {
 public:
  explicit DiscriminantGroup(LatticePtr lattice);

  LatticePtr const& lattice() const { return lattice_; }
  IntVector const& invariant_factors() const { return factors_; }
  std::vector<RatVector> const& generator_lifts() const { return lifts_; }
  std::size_t order() const { return order_; }

  // Mixed-radix enumeration of all elements; element(0) is zero.
  DiscElement element(std::size_t index) const;
  std::size_t index_of(DiscElement const& e) const;

  // Class of a dual vector given by its pairing vector gram * x.
  DiscElement class_of_pairings(IntVector const& pairings) const;
  // Class of a rational vector that lies in the dual lattice.
  DiscElement class_of(RatVector const& dual_vector) const;

  // A rational lift of the element.
  RatVector lift(DiscElement const& e) const;

  // q(lift) mod 2Z, in [0, 2). Even lattices only.
  Rational qbar(DiscElement const& e) const;
  // Discriminant bilinear form b(x, y) mod Z, in [0, 1).
  Rational bbar(DiscElement const& a, DiscElement const& b) const;

  DiscElement add(DiscElement const& a, DiscElement const& b) const;

 private:
  LatticePtr lattice_;
  IntVector factors_;
  IntMatrix projection_;  // rows of U belonging to nontrivial factors
  std::vector<RatVector> lifts_;
  std::size_t order_ = 1;
};

DiscriminantGroup discriminant_group(LatticePtr const& lattice);

// Residue class of v / divisor. Throws NotInDual unless divisor divides every
// pairing of v.
DiscElement disc_residue(DiscriminantGroup const& group, LatticeVector const& v,
                         Integer const& divisor);

}  // namespace wallkit
