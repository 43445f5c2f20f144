#include "wallkit/nikulin.hpp"

#include <charconv>
#include <string>

#include "wallkit/error.hpp"
#include "wallkit/linalg.hpp"

namespace wallkit {

LatticePtr const& lambda_lattice() {
  static LatticePtr const lattice = make_standard("Lambda");
  return lattice;
}

LatticePtr const& lambda_hat_lattice() {
  static LatticePtr const lattice = make_standard("LambdaHat");
  return lattice;
}

LatticePtr const& lambda_hat1_lattice() {
  static LatticePtr const lattice = make_standard("LambdaHat1");
  return lattice;
}

bool is_lambda(LatticeVector const& v) { return v.lattice()->same_as(*lambda_lattice()); }
bool is_lambda_hat(LatticeVector const& v) {
  return v.lattice()->same_as(*lambda_hat_lattice());
}

namespace {

void require_lambda(LatticeVector const& v) {
  require_same_lattice(*v.lattice(), *lambda_lattice());
}

void require_hat(LatticeVector const& v) {
  require_same_lattice(*v.lattice(), *lambda_hat_lattice());
}

LatticeVector from_entries(LatticePtr const& lattice,
                           std::initializer_list<std::pair<std::size_t, Integer>> entries) {
  IntVector c(kNikulinRank);
  for (auto const& [index, value] : entries) c[index] += value;
  return LatticeVector(lattice, std::move(c));
}

void require_nonzero(LatticeVector const& v) {
  if (v.is_zero()) throw Error(ErrorCode::kZeroVector, "zero vector has no ray");
}

}  // namespace

namespace named {

LatticeVector L(Integer const& i) { return from_entries(lambda_hat_lattice(), {{0, i}, {1, 1}}); }
LatticeVector e1() { return from_entries(lambda_hat_lattice(), {{kE8Start, 1}}); }
LatticeVector e2() {
  return from_entries(lambda_hat_lattice(), {{kE8Start, 1}, {kE8Start + 2, 1}});
}
LatticeVector hhat1() { return from_entries(lambda_hat_lattice(), {{kTail1, 1}}); }
LatticeVector hhat2() { return from_entries(lambda_hat_lattice(), {{kTail2, 1}}); }
LatticeVector delta_hat() { return hhat1() + hhat2(); }
LatticeVector sigma_hat() { return hhat1() - hhat2(); }

LatticeVector L2(Integer const& i) { return from_entries(lambda_lattice(), {{0, i}, {1, 1}}); }
LatticeVector e1_lambda() { return from_entries(lambda_lattice(), {{kE8Start, 1}}); }
LatticeVector e2_lambda() {
  return from_entries(lambda_lattice(), {{kE8Start, 1}, {kE8Start + 2, 1}});
}
LatticeVector h1() { return from_entries(lambda_lattice(), {{kTail1, 1}}); }
LatticeVector h2() { return from_entries(lambda_lattice(), {{kTail2, 1}}); }
LatticeVector delta_prime() { return h1() + h2(); }
LatticeVector sigma_prime() { return h1() - h2(); }

namespace {

std::optional<Integer> parse_index(std::string_view text) {
  long long value = 0;
  auto const* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
  return Integer(value);
}

}  // namespace

std::optional<LatticeVector> by_name(std::string_view name) {
  if (name == "delta_prime") return delta_prime();
  if (name == "sigma_prime") return sigma_prime();
  if (name == "h1") return h1();
  if (name == "h2") return h2();
  if (name == "delta_hat") return delta_hat();
  if (name == "sigma_hat") return sigma_hat();
  if (name == "hhat1") return hhat1();
  if (name == "hhat2") return hhat2();
  if (name == "e1") return e1();
  if (name == "e2") return e2();
  if (name == "e1_lambda") return e1_lambda();
  if (name == "e2_lambda") return e2_lambda();
  if (name.starts_with("L2_")) {
    if (auto i = parse_index(name.substr(3))) return L2(*i);
    return std::nullopt;
  }
  if (name.starts_with("L_")) {
    if (auto i = parse_index(name.substr(2))) return L(*i);
  }
  return std::nullopt;
}

std::vector<std::string> names() {
  return {"delta_prime", "sigma_prime", "h1",        "h2",        "delta_hat",
          "sigma_hat",   "hhat1",       "hhat2",     "e1",        "e2",
          "e1_lambda",   "e2_lambda",   "L_<i>",     "L2_<i>"};
}

}  // namespace named

LatticeVector twist_ray_to_hat(LatticeVector const& v) {
  require_lambda(v);
  require_nonzero(v);
  IntVector c = v.coords();
  for (std::size_t k = 0; k < kE8Start; ++k) c[k] *= 2;
  c[kTail1] *= 2;
  c[kTail2] *= 2;
  return primitive_part(LatticeVector(lambda_hat_lattice(), std::move(c)));
}

LatticeVector twist_ray_to_lambda(LatticeVector const& v) {
  require_nonzero(v);
  LatticeVector hat = v.lattice()->same_as(*lambda_hat1_lattice()) ? hat1_to_hat(v) : v;
  require_hat(hat);
  IntVector c = hat.coords();
  for (std::size_t k = kE8Start; k < kE8Start + kE8Length; ++k) c[k] *= 2;
  return primitive_part(LatticeVector(lambda_lattice(), std::move(c)));
}

bool in_hat1(LatticeVector const& v) {
  require_hat(v);
  return (v[kTail1] + v[kTail2]) % 2 == 0;
}

LatticeVector hat_to_hat1(LatticeVector const& v) {
  if (!in_hat1(v)) {
    throw Error(ErrorCode::kPreconditionViolated, "vector does not lie in LambdaHat1");
  }
  IntVector c = v.coords();
  Integer a = c[kTail1], b = c[kTail2];
  c[kTail1] = (a + b) / 2;
  c[kTail2] = (a - b) / 2;
  return LatticeVector(lambda_hat1_lattice(), std::move(c));
}

LatticeVector hat1_to_hat(LatticeVector const& v) {
  require_same_lattice(*v.lattice(), *lambda_hat1_lattice());
  IntVector c = v.coords();
  Integer x = c[kTail1], y = c[kTail2];
  c[kTail1] = x + y;
  c[kTail2] = x - y;
  return LatticeVector(lambda_hat_lattice(), std::move(c));
}

LatticeVector hat1_ray_generator(LatticeVector const& v) {
  require_nonzero(v);
  LatticeVector p = primitive_part(v);
  return in_hat1(p) ? p : Integer(2) * p;
}

Integer hat1_divisibility(LatticeVector const& v) { return divisibility(hat_to_hat1(v)); }

bool is_hat1_primitive(LatticeVector const& v) { return is_primitive(hat_to_hat1(v)); }

bool hat_div1_predicate(LatticeVector const& v) {
  require_lambda(v);
  require_nonzero(v);
  if (!is_primitive(v)) throw Error(ErrorCode::kImprimitive, "hat_div1_predicate needs a primitive vector");
  bool u_odd = false;
  for (std::size_t k = 0; k < kE8Start; ++k) u_odd = u_odd || v[k] % 2 != 0;
  bool e8_even = true;
  for (std::size_t k = kE8Start; k < kE8Start + kE8Length; ++k) e8_even = e8_even && v[k] % 2 == 0;
  bool in_span = (v[kTail1] - v[kTail2]) % 2 == 0;
  return u_odd && e8_even && in_span;
}

bool has_e8_minus2_block(GramLattice const& pic) {
  auto const& g = pic.gram();
  for (auto const& b : pic.blocks()) {
    if (b.length != 8) continue;
    IntMatrix half(8, 8);
    bool halvable = true;
    for (std::size_t r = 0; r < 8 && halvable; ++r) {
      for (std::size_t c = 0; c < 8; ++c) {
        Integer const& entry = g(b.start + r, b.start + c);
        if (entry % 2 != 0) {
          halvable = false;
          break;
        }
        half(r, c) = -entry / 2;
      }
    }
    if (!halvable) continue;
    bool even = true;
    for (std::size_t r = 0; r < 8; ++r) even = even && half(r, r) % 2 == 0;
    if (even && is_positive_definite(half) && determinant(half) == 1) return true;
  }
  return false;
}

bool symplectic_involution_criterion(GramLattice const& pic, bool has_invariant_kahler) {
  return has_invariant_kahler && has_e8_minus2_block(pic);
}

namespace {

// Coordinate scaling carrying Lambda rays to LambdaHat rays.
IntVector twist_scale() {
  IntVector s(kNikulinRank, Integer(1));
  for (std::size_t k = 0; k < kE8Start; ++k) s[k] = 2;
  s[kTail1] = 2;
  s[kTail2] = 2;
  return s;
}

// Returns D M D^{-1} where D = diag(num / den).
IntMatrix conjugate(IntMatrix const& m, IntVector const& num, IntVector const& den) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer n = num[r] * den[c] * m(r, c);
      Integer d = den[r] * num[c];
      if (n % d != 0) {
        throw Error(ErrorCode::kNonIntegral, "transported isometry is not integral");
      }
      out(r, c) = n / d;
    }
  }
  return out;
}

}  // namespace

Isometry transport_to_hat(Isometry const& iso) {
  require_same_lattice(*iso.lattice(), *lambda_lattice());
  IntVector ones(kNikulinRank, Integer(1));
  return Isometry(lambda_hat_lattice(), conjugate(iso.matrix(), twist_scale(), ones));
}

Isometry transport_to_lambda(Isometry const& iso) {
  require_same_lattice(*iso.lattice(), *lambda_hat_lattice());
  IntVector ones(kNikulinRank, Integer(1));
  return Isometry(lambda_lattice(), conjugate(iso.matrix(), ones, twist_scale()));
}

}  // namespace wallkit
