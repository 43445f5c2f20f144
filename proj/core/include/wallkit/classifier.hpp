#pragma once

#include <optional>
#include <string_view>

#include "wallkit/discriminant.hpp"
#include "wallkit/integer.hpp"
#include "wallkit/lattice.hpp"

namespace wallkit {

enum class Ambient { kLambdaHat1, kLambda };

std::string_view ambient_name(Ambient a);

struct OrbitInvariants {
  Integer q;
  Integer div;
  // Residue of v_E8 / 2 in A_{E8(-2)} and its q-bar value (LambdaHat1, div 2).
  std::optional<DiscElement> ebar;
  std::optional<int> qbar;
  // Norm of the E8 projection.
  Integer e8_norm;
  // Lambda only.
  std::optional<bool> hat_div1;

  friend bool operator==(OrbitInvariants const&, OrbitInvariants const&) = default;
};

struct OrbitClass {
  Ambient ambient;
  int case_id;
  Integer i;
  LatticeVector representative;
  OrbitInvariants invariants;
};

// v in LambdaHat coordinates, lying in LambdaHat1 and primitive there.
OrbitInvariants invariants_hat(LatticeVector const& v);
OrbitClass classify_hat(LatticeVector const& v);

// Canonical LambdaHat1 representative (LambdaHat coordinates) of a case.
LatticeVector hat_representative(int case_id, Integer const& i);

// v primitive in Lambda. Evaluated from the condition table and, separately,
// through the twist to LambdaHat1; throws InternalMismatch if they differ.
OrbitClass classify_lambda(LatticeVector const& v);

// The condition-table path alone.
OrbitClass classify_lambda_direct(LatticeVector const& v);
// The twist path alone.
OrbitClass classify_lambda_via_hat(LatticeVector const& v);

LatticeVector lambda_representative(int case_id, Integer const& i);

// Dispatches on the lattice of v (LambdaHat or Lambda).
OrbitClass classify(LatticeVector const& v);

// True when both classify to the same (case, i), which places them in one
// monodromy orbit. False only means no such conclusion.
bool same_known_orbit(LatticeVector const& v, LatticeVector const& w);

enum class ReflectionStatus { kKnownMonodromy, kIntegralUnknown, kNonIntegral };

std::string_view reflection_status_name(ReflectionStatus s);

// For v in Lambda with negative norm, on its primitive ray. Reflections in
// (q, div) = (-2, 2) or (-4, 2) are monodromy operators.
ReflectionStatus known_monodromy_reflection(LatticeVector const& v);

}  // namespace wallkit
