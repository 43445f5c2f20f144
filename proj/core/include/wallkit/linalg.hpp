#pragma once

#include <optional>
#include <vector>

#include "wallkit/integer.hpp"

namespace wallkit {

// Exact determinant of a square integer matrix (Bareiss elimination).
Integer determinant(IntMatrix const& a);

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix u_inverse;
  IntMatrix v;
  IntVector diagonal() const;
};

SmithForm smith_normal_form(IntMatrix const& a);

// A basis (as columns) of the integer kernel {x in Z^n : A x = 0}.
std::vector<IntVector> integer_kernel(IntMatrix const& a);

// A basis of the Z-span of the given vectors, in row-echelon order.
std::vector<IntVector> lattice_basis(std::vector<IntVector> const& generators);

// Solves A X = B exactly for square nonsingular A. Returns nullopt if A is
// singular.
std::optional<std::vector<RatVector>> solve_rational(
    IntMatrix const& a, std::vector<RatVector> const& rhs_columns);

// Rational LDL^T pivots of a symmetric matrix; nullopt when a zero pivot is
// hit before the end.
std::optional<RatVector> ldl_pivots(IntMatrix const& symmetric);

bool is_positive_definite(IntMatrix const& symmetric);

}  // namespace wallkit
