#pragma once

// Slow, independent reference computations for the test suites. Nothing in
// here calls into the wallkit algorithms it is used to check.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "wallkit/integer.hpp"
#include "wallkit/lattice.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<long long>>;
using Vec = std::vector<long long>;

long long dot(Vec const& a, Matrix const& g, Vec const& b);
long long gcd_all(Vec const& v);

// Determinant by rational Gaussian elimination with row swaps.
wallkit::Rational determinant(Matrix const& g);

// Every integer vector with entries in [-bound, bound] whose norm is in
// `norms` (zero excluded), by box enumeration.
std::vector<Vec> box_vectors(Matrix const& g, int bound, std::set<long long> const& norms);

// Roots of a root lattice as the orbit of the basis under its own simple
// reflections (all basis vectors must have norm -2).
std::set<Vec> root_closure(Matrix const& g);

// A_{E8(-2)} as F_2^8: x stands for (1/2) sum x_i b_i.
struct E8Disc {
  Matrix gram;  // E8(-2)
  int qbar(unsigned x) const;  // q(x/2) mod 2 for the bit vector x
  unsigned reflect(unsigned x, int k) const;  // action of the reflection in b_k
};
E8Disc e8_disc();
std::vector<std::size_t> orbit_sizes(E8Disc const& d);

// Wall rule on an ambient vector of Lambda, written out from the table.
bool nikulin_wall_rule(Vec const& v, Matrix const& lambda_gram);

// Primitive wall rays of span(basis) by box enumeration of coefficients,
// each ray normalized to a positive leading coordinate.
std::set<Vec> brute_force_wall_rays(std::vector<Vec> const& basis, Matrix const& ambient,
                                    int bound);

Matrix to_matrix(wallkit::IntMatrix const& m);
Vec to_vec(wallkit::IntVector const& v);
wallkit::IntVector from_vec(Vec const& v);

// Random primitive vector with coordinates in [-bound, bound].
wallkit::IntVector random_primitive(std::mt19937_64& rng, std::size_t n, int bound);

}  // namespace oracle
