#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wallkit/integer.hpp"

namespace wallkit {

// A contiguous coordinate range of a lattice basis forming an orthogonal
// summand.
struct Block {
  std::string name;
  std::size_t start = 0;
  std::size_t length = 0;

  friend bool operator==(Block const&, Block const&) = default;
};

// Nondegenerate integral lattice given by a symmetric Gram matrix together
// with an orthogonal block decomposition of its basis. Construction checks
// symmetry, nondegeneracy and block orthogonality.
class GramLattice {
 public:
  GramLattice(std::string name, IntMatrix gram, std::vector<Block> blocks);

  std::string const& name() const { return name_; }
  IntMatrix const& gram() const { return gram_; }
  std::vector<Block> const& blocks() const { return blocks_; }
  std::size_t rank() const { return gram_.rows(); }
  Integer const& determinant() const { return determinant_; }
  bool is_even() const;

  // Exact name lookup; nullptr when absent.
  Block const* find_block(std::string_view name) const;

  // Pairings of x with every basis vector, i.e. gram * x.
  IntVector pairings(IntVector const& x) const;

  // Structural equality: same Gram matrix and block layout.
  bool same_as(GramLattice const& other) const;

 private:
  std::string name_;
  IntMatrix gram_;
  std::vector<Block> blocks_;
  Integer determinant_;
};

using LatticePtr = std::shared_ptr<GramLattice const>;

LatticePtr make_lattice(std::string name, IntMatrix gram,
                        std::vector<Block> blocks = {});

// Integer coordinate vector with respect to the basis of a lattice.
class LatticeVector {
 public:
  LatticeVector(LatticePtr lattice, IntVector coords);

  static LatticeVector zero(LatticePtr lattice);
  static LatticeVector basis(LatticePtr lattice, std::size_t index);

  LatticePtr const& lattice() const { return lattice_; }
  IntVector const& coords() const { return coords_; }
  Integer const& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const { return coords_.size(); }
  bool is_zero() const;

  LatticeVector operator+(LatticeVector const& other) const;
  LatticeVector operator-(LatticeVector const& other) const;
  LatticeVector operator-() const;
  friend LatticeVector operator*(Integer const& k, LatticeVector const& v);

  // Same lattice and same coordinates.
  friend bool operator==(LatticeVector const& a, LatticeVector const& b);

 private:
  LatticePtr lattice_;
  IntVector coords_;
};

void require_same_lattice(GramLattice const& a, GramLattice const& b);

// Standard lattices. Accepted identifiers:
//   "U", "U(n)", "E8(-1)" / "E8m1", "E8(-2)" / "E8m2", "(-n)",
//   "Lambda", "LambdaHat", "LambdaHat1", "LambdaHat2", "LambdaHat3",
//   "LambdaK3", "LambdaK3[2]".
// Basis orders are frozen; see README for the coordinate layout.
LatticePtr make_standard(std::string_view name);

// The 8x8 E8(-2) Gram matrix in the fixed basis; E8(-1) is half of it.
IntMatrix e8_minus2_gram();

// Block-diagonal orthogonal sum. Blocks of the parts are kept; colliding
// block names get "_1", "_2", ... suffixes.
LatticePtr direct_sum(std::vector<LatticePtr> const& parts,
                      std::string name = {});

// Same basis with every Gram entry multiplied by n (n != 0).
LatticePtr rescale(LatticePtr const& lattice, Integer const& n,
                   std::string name = {});

// Returns a copy with blocks renamed in order.
LatticePtr rename_blocks(LatticePtr const& lattice,
                         std::vector<std::string> const& names,
                         std::string name = {});

Integer pairing(LatticeVector const& v, LatticeVector const& w);
Integer norm(LatticeVector const& v);

// Positive generator of the ideal (v, L). Throws on v = 0.
Integer divisibility(LatticeVector const& v);

bool is_primitive(LatticeVector const& v);
LatticeVector primitive_part(LatticeVector const& v);

// Coordinate restriction to the named block(s), zero-extended. A name of the
// form "X^k" selects every block named "X_1", ..., "X_k".
LatticeVector project_block(LatticeVector const& v, std::string_view block);
LatticeVector project_blocks(LatticeVector const& v,
                             std::span<std::string const> blocks);

// The coordinates of v restricted to one block, as a vector of the block's
// own sublattice.
IntVector block_coords(LatticeVector const& v, std::string_view block);

// The block as a standalone lattice (Gram submatrix).
LatticePtr block_lattice(GramLattice const& lattice, std::string_view block);

}  // namespace wallkit
