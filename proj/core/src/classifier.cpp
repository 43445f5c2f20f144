#include "wallkit/classifier.hpp"

#include <string>

#include "wallkit/error.hpp"
#include "wallkit/isometry.hpp"
#include "wallkit/nikulin.hpp"

namespace wallkit {

std::string_view ambient_name(Ambient a) {
  return a == Ambient::kLambda ? "Lambda" : "LambdaHat1";
}

namespace {

IntVector e8_part(LatticeVector const& v) {
  return IntVector(v.coords().begin() + kE8Start, v.coords().begin() + kE8Start + kE8Length);
}

LatticePtr const& e8_minus2() {
  static LatticePtr const lattice = make_standard("E8(-2)");
  return lattice;
}

DiscriminantGroup const& e8_minus2_group() {
  static DiscriminantGroup const group(e8_minus2());
  return group;
}

Integer e8_norm(LatticeVector const& v) {
  IntVector m = e8_part(v);
  IntVector gm = e8_minus2()->pairings(m);
  Integer q = dot(m, gm);
  // Lambda carries E8(-1), half the E8(-2) form.
  return is_lambda(v) ? q / 2 : q;
}

std::string to_text(Integer const& n) { return to_string(n); }

[[noreturn]] void infeasible(OrbitInvariants const& inv, std::string const& where) {
  throw Error(ErrorCode::kInfeasibleInvariants,
              where + ": no case for q = " + to_text(inv.q) + ", div = " + to_text(inv.div));
}

// Sign flip of the two rank-one summands, applied when the L_0 term is
// dropped from a representative.
LatticeVector flip_tail(LatticeVector v) {
  IntVector c = v.coords();
  c[kTail1] = -c[kTail1];
  c[kTail2] = -c[kTail2];
  return LatticeVector(v.lattice(), std::move(c));
}

}  // namespace

OrbitInvariants invariants_hat(LatticeVector const& v) {
  if (v.is_zero()) throw Error(ErrorCode::kZeroVector, "classification of the zero vector");
  LatticeVector own = hat_to_hat1(v);
  if (!is_primitive(own)) {
    throw Error(ErrorCode::kImprimitive, "vector is not primitive in LambdaHat1");
  }
  OrbitInvariants inv;
  inv.q = norm(v);
  inv.div = divisibility(own);
  inv.e8_norm = e8_norm(v);
  if (inv.div == 2) {
    IntVector m = e8_part(v);
    inv.ebar = disc_residue(e8_minus2_group(), LatticeVector(e8_minus2(), m), 2);
    inv.qbar = static_cast<int>(floor_mod(inv.e8_norm / 4, 2));
  }
  return inv;
}

LatticeVector hat_representative(int case_id, Integer const& i) {
  using namespace named;
  auto with_l = [](Integer const& k, int mult, LatticeVector const& rest) {
    if (k == 0) return flip_tail(rest);
    return Integer(mult) * L(k) + rest;
  };
  auto const zero = LatticeVector::zero(lambda_hat_lattice());
  switch (case_id) {
    case 1: return L(i);
    case 2: return with_l(i, 2, zero - delta_hat());
    case 3: return with_l(i + 1, 2, e2() - delta_hat());
    case 4: return with_l(i, 2, zero - delta_hat() - sigma_hat());
    case 5: return with_l(i + 1, 2, e2() - delta_hat() - sigma_hat());
    case 6: return with_l(i, 2, e1());
    case 7: return with_l(i, 2, e1() - delta_hat());
    case 8: return with_l(i, 2, e1() - delta_hat() - sigma_hat());
    case 9: return with_l(i + 1, 2, e2());
    default: break;
  }
  throw Error(ErrorCode::kInvalidArgument, "case id must be 1..9");
}

LatticeVector lambda_representative(int case_id, Integer const& i) {
  using namespace named;
  auto with_l = [](Integer const& k, int mult, LatticeVector const& rest) {
    if (k == 0) return flip_tail(rest);
    return Integer(mult) * L2(k) + rest;
  };
  auto const zero = LatticeVector::zero(lambda_lattice());
  switch (case_id) {
    case 1: return L2(i);
    case 2: return with_l(i, 2, zero - delta_prime());
    case 3: return with_l(i + 1, 2, Integer(2) * e2_lambda() - delta_prime());
    case 4: return with_l(i, 1, zero - h1());
    case 5: return with_l(i + 1, 1, e2_lambda() - h1());
    case 6: return with_l(i, 1, e1_lambda());
    case 7: return with_l(i, 2, Integer(2) * e1_lambda() - delta_prime());
    case 8: return with_l(i, 1, e1_lambda() - h1());
    case 9: return with_l(i + 1, 1, e2_lambda());
    default: break;
  }
  throw Error(ErrorCode::kInvalidArgument, "case id must be 1..9");
}

OrbitClass classify_hat(LatticeVector const& v) {
  OrbitInvariants inv = invariants_hat(v);
  Integer const& q = inv.q;
  int case_id = 0;
  Integer i;
  if (inv.div == 1) {
    case_id = 1;
    i = q / 2;
  } else if (inv.div == 2) {
    bool const e_zero = inv.ebar->is_zero();
    int const qbar = *inv.qbar;
    int const r = static_cast<int>(floor_mod(q, 8));
    if (r == 6 && e_zero) {
      case_id = 2;
    } else if (r == 6 && qbar == 0) {
      case_id = 3;
    } else if (r == 4 && e_zero) {
      case_id = 4;
    } else if (r == 4 && qbar == 0) {
      case_id = 5;
    } else if (r == 4 && qbar == 1) {
      case_id = 6;
    } else if (r == 2 && !e_zero && qbar == 1) {
      case_id = 7;
    } else if (r == 0 && !e_zero && qbar == 1) {
      case_id = 8;
    } else if (r == 0 && !e_zero && qbar == 0) {
      case_id = 9;
    } else {
      infeasible(inv, "classify_hat");
    }
    switch (case_id) {
      case 2: case 3: i = (q + 2) / 8; break;
      case 4: case 5: case 6: i = (q + 4) / 8; break;
      case 7: i = (q + 6) / 8; break;
      case 8: i = (q + 8) / 8; break;
      default: i = q / 8; break;
    }
  } else {
    infeasible(inv, "classify_hat");
  }
  return OrbitClass{Ambient::kLambdaHat1, case_id, i, hat_representative(case_id, i), inv};
}

namespace {

OrbitInvariants invariants_lambda(LatticeVector const& v) {
  require_same_lattice(*v.lattice(), *lambda_lattice());
  if (v.is_zero()) throw Error(ErrorCode::kZeroVector, "classification of the zero vector");
  if (!is_primitive(v)) throw Error(ErrorCode::kImprimitive, "vector is not primitive in Lambda");
  OrbitInvariants inv;
  inv.q = norm(v);
  inv.div = divisibility(v);
  inv.e8_norm = e8_norm(v);
  inv.hat_div1 = hat_div1_predicate(v);
  return inv;
}

}  // namespace

OrbitClass classify_lambda_direct(LatticeVector const& v) {
  OrbitInvariants inv = invariants_lambda(v);
  Integer const& q = inv.q;
  int const e8_mod4 = static_cast<int>(floor_mod(inv.e8_norm, 4));
  int case_id = 0;
  Integer i;
  if (*inv.hat_div1) {
    case_id = 1;
    i = q / 4;
  } else if (inv.div == 2) {
    if (floor_mod(q, 4) == 2) {
      case_id = 4;
      i = (q + 2) / 4;
    } else if (floor_mod(q, 16) == 12) {
      bool e8_divisible_by_4 = true;
      for (std::size_t k = kE8Start; k < kE8Start + kE8Length; ++k)
        e8_divisible_by_4 = e8_divisible_by_4 && v[k] % 4 == 0;
      case_id = e8_divisible_by_4 ? 2 : 3;
      i = (q + 4) / 16;
    } else if (floor_mod(q, 16) == 4) {
      case_id = 7;
      i = (q + 12) / 16;
    } else {
      infeasible(inv, "classify_lambda");
    }
  } else if (inv.div == 1) {
    if (floor_mod(q, 4) == 2) {
      case_id = e8_mod4 == 0 ? 5 : 6;
      i = (q + 2) / 4;
    } else if (floor_mod(q, 4) == 0) {
      if (e8_mod4 == 2) {
        case_id = 8;
        i = (q + 4) / 4;
      } else {
        case_id = 9;
        i = q / 4;
      }
    } else {
      infeasible(inv, "classify_lambda");
    }
  } else {
    infeasible(inv, "classify_lambda");
  }
  return OrbitClass{Ambient::kLambda, case_id, i, lambda_representative(case_id, i), inv};
}

OrbitClass classify_lambda_via_hat(LatticeVector const& v) {
  OrbitInvariants inv = invariants_lambda(v);
  OrbitClass hat = classify_hat(hat1_ray_generator(twist_ray_to_hat(v)));
  return OrbitClass{Ambient::kLambda, hat.case_id, hat.i,
                    twist_ray_to_lambda(hat.representative), inv};
}

OrbitClass classify_lambda(LatticeVector const& v) {
  OrbitClass direct = classify_lambda_direct(v);
  OrbitClass twisted = classify_lambda_via_hat(v);
  if (direct.case_id != twisted.case_id || direct.i != twisted.i ||
      direct.representative != twisted.representative) {
    throw Error(ErrorCode::kInternalMismatch,
                "condition table gives case " + std::to_string(direct.case_id) +
                    ", twist gives case " + std::to_string(twisted.case_id));
  }
  return direct;
}

OrbitClass classify(LatticeVector const& v) {
  if (is_lambda(v)) return classify_lambda(v);
  if (is_lambda_hat(v)) return classify_hat(v);
  if (v.lattice()->same_as(*lambda_hat1_lattice())) return classify_hat(hat1_to_hat(v));
  throw Error(ErrorCode::kLatticeMismatch,
              "classification needs Lambda, LambdaHat or LambdaHat1, got " + v.lattice()->name());
}

bool same_known_orbit(LatticeVector const& v, LatticeVector const& w) {
  require_same_lattice(*v.lattice(), *w.lattice());
  OrbitClass a = classify(v);
  OrbitClass b = classify(w);
  return a.case_id == b.case_id && a.i == b.i;
}

std::string_view reflection_status_name(ReflectionStatus s) {
  switch (s) {
    case ReflectionStatus::kKnownMonodromy: return "known_monodromy";
    case ReflectionStatus::kIntegralUnknown: return "integral_unknown";
    case ReflectionStatus::kNonIntegral: return "non_integral";
  }
  return "unknown";
}

ReflectionStatus known_monodromy_reflection(LatticeVector const& v) {
  require_same_lattice(*v.lattice(), *lambda_lattice());
  if (v.is_zero()) throw Error(ErrorCode::kZeroVector, "reflection in the zero vector");
  LatticeVector p = primitive_part(v);
  Integer q = norm(p);
  if (q >= 0) {
    throw Error(ErrorCode::kPreconditionViolated, "reflection status needs a negative norm");
  }
  Integer d = divisibility(p);
  if (d == 2 && (q == -2 || q == -4)) return ReflectionStatus::kKnownMonodromy;
  return is_reflection_integral(p) ? ReflectionStatus::kIntegralUnknown
                                   : ReflectionStatus::kNonIntegral;
}

}  // namespace wallkit
