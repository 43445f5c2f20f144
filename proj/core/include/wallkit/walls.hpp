#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "wallkit/integer.hpp"
#include "wallkit/lattice.hpp"

namespace wallkit {

// Sublattice of an ambient lattice spanned by linearly independent vectors.
class PicardEmbedding {
 public:
  PicardEmbedding(LatticePtr ambient, std::vector<LatticeVector> basis);

  LatticePtr const& ambient() const { return ambient_; }
  std::vector<LatticeVector> const& basis() const { return basis_; }
  IntMatrix const& induced_gram() const { return induced_gram_; }
  std::size_t rank() const { return basis_.size(); }

  // Ambient vector with the given coefficients in the basis.
  LatticeVector embed(IntVector const& coefficients) const;

  // True iff the basis spans a primitive sublattice of the ambient lattice.
  bool is_saturated() const;

 private:
  LatticePtr ambient_;
  std::vector<LatticeVector> basis_;
  IntMatrix induced_gram_;
};

enum class WallRule {
  kNikulin,  // Lambda
  kK3,       // D^2 = -2
  kK3n2,     // D^2 = -2, or D^2 = -10 with div 2
};

std::string_view wall_rule_name(WallRule rule);

struct WallEntry {
  LatticeVector ray;
  Integer q;
  Integer div;
  std::optional<int> case_id;  // Nikulin rule only
};

struct WallReport {
  std::vector<WallEntry> walls;
  bool complete = false;
};

// Nikulin-type walls in Lambda, on the primitive ray of D:
// (q, div) in {(-2, 1), (-4, 2), (-6, 2)}, or (-12, 2) with the U(2)^3
// part divisible by 2.
bool is_wall(LatticeVector const& D);
bool is_wall(LatticeVector const& D, WallRule rule);

// All primitive wall rays of a negative definite, saturated Picard lattice
// in Lambda. Each ray appears once; its sign makes (D, reference) > 0 when a
// reference class is given, otherwise the first nonzero coordinate positive.
// Sorted by ambient coordinates.
WallReport walls_in_picard(PicardEmbedding const& pic,
                           std::optional<LatticeVector> const& reference = std::nullopt);

// Same for LambdaK3 (kK3) and LambdaK3[2] (kK3n2).
WallReport k3_family_walls(WallRule kind, PicardEmbedding const& pic);

// alpha lies in the chamber of omega: positive norm, (alpha, omega) > 0, and
// (alpha, D) > 0 for every wall oriented by (D, omega) > 0.
// Throws NotPositive if norm(omega) <= 0, OmegaOnWall if (D, omega) = 0.
bool kahler_side_test(LatticeVector const& alpha, LatticeVector const& omega,
                      WallReport const& walls);

struct ScanReport {
  std::size_t requested = 0;
  std::size_t accepted = 0;
  std::size_t attempts = 0;
  std::map<int, std::size_t> q_mod4;  // residue -> count
  std::size_t target_hits = 0;        // samples with q == target_q
};

// Random primitive vectors x of v-perp with div(x) = div in the ambient
// lattice, drawn from the sublattice v-perp intersected with div * dual.
// Deterministic for a given seed.
ScanReport orthocomplement_square_scan(LatticeVector const& v, Integer const& div,
                                       std::size_t sample_count,
                                       std::optional<Integer> const& target_q = std::nullopt,
                                       std::uint64_t seed = 0x5eed);

// Generators of {x : (x, v) = 0, (x, L) in div * Z}.
std::vector<IntVector> orthocomplement_basis(LatticeVector const& v, Integer const& div);

}  // namespace wallkit
