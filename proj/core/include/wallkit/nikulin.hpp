#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wallkit/integer.hpp"
#include "wallkit/isometry.hpp"
#include "wallkit/lattice.hpp"

namespace wallkit {

// Coordinate layout shared by Lambda, LambdaHat and LambdaHat1:
// three hyperbolic planes, the E8 block, then the two rank-one summands.
inline constexpr std::size_t kE8Start = 6;
inline constexpr std::size_t kE8Length = 8;
inline constexpr std::size_t kTail1 = 14;
inline constexpr std::size_t kTail2 = 15;
inline constexpr std::size_t kNikulinRank = 16;

inline constexpr int kFujikiConstant = 6;

// Shared instances of the three ambient lattices.
LatticePtr const& lambda_lattice();
LatticePtr const& lambda_hat_lattice();
// LambdaHat1 in its own basis U^3 + E8(-2) + <delta_hat> + <sigma_hat>.
LatticePtr const& lambda_hat1_lattice();

bool is_lambda(LatticeVector const& v);
bool is_lambda_hat(LatticeVector const& v);

namespace named {

// In LambdaHat.
LatticeVector L(Integer const& i);  // i e + f in U_1, norm 2i
LatticeVector e1();                 // b1, norm -4
LatticeVector e2();                 // b1 + b3, norm -8
LatticeVector hhat1();
LatticeVector hhat2();
LatticeVector delta_hat();  // hhat1 + hhat2
LatticeVector sigma_hat();  // hhat1 - hhat2

// In Lambda.
LatticeVector L2(Integer const& i);  // i e + f in U(2)_1, norm 4i
LatticeVector e1_lambda();           // b1 in E8(-1), norm -2
LatticeVector e2_lambda();           // b1 + b3, norm -4
LatticeVector h1();
LatticeVector h2();
LatticeVector delta_prime();  // h1 + h2
LatticeVector sigma_prime();  // h1 - h2

// Lookup by identifier: delta_prime, sigma_prime, h1, h2, delta_hat,
// sigma_hat, hhat1, hhat2, e1, e2, e1_lambda, e2_lambda, L_<i>, L2_<i>.
std::optional<LatticeVector> by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace named

// Ray maps between Lambda and LambdaHat. Both return the primitive generator
// of the image ray and are mutually inverse on rays.
LatticeVector twist_ray_to_hat(LatticeVector const& v);
LatticeVector twist_ray_to_lambda(LatticeVector const& v);

// LambdaHat1 inside LambdaHat: coord14 + coord15 even.
bool in_hat1(LatticeVector const& v);
// Coordinates change between the LambdaHat embedding and the own basis.
LatticeVector hat_to_hat1(LatticeVector const& v);
LatticeVector hat1_to_hat(LatticeVector const& v);
// Primitive generator in LambdaHat1 of the ray through v (LambdaHat coords).
LatticeVector hat1_ray_generator(LatticeVector const& v);
// Divisibility relative to LambdaHat1 of v in LambdaHat coordinates.
Integer hat1_divisibility(LatticeVector const& v);
bool is_hat1_primitive(LatticeVector const& v);

// For primitive v in Lambda: the U(2)^3 part is not divisible by 2, the E8
// part is divisible by 2, and the (-2)^2 part lies in <delta', sigma'>.
bool hat_div1_predicate(LatticeVector const& v);

// True iff `pic` has a block isometric to E8(-2) and the caller asserts an
// invariant Kahler class.
bool has_e8_minus2_block(GramLattice const& pic);
bool symplectic_involution_criterion(GramLattice const& pic, bool has_invariant_kahler);

// Conjugation of isometries through the twist identification. Throws
// NonIntegral when the conjugate is not integral.
Isometry transport_to_hat(Isometry const& iso);
Isometry transport_to_lambda(Isometry const& iso);

}  // namespace wallkit
