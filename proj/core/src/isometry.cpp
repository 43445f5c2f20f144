#include "wallkit/isometry.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

#include "wallkit/error.hpp"
#include "wallkit/linalg.hpp"

namespace wallkit {

Isometry::Isometry(LatticePtr lattice, IntMatrix matrix)
    : lattice_(std::move(lattice)), matrix_(std::move(matrix)) {
  auto const& g = lattice_->gram();
  if (matrix_.rows() != g.rows() || matrix_.cols() != g.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "isometry matrix has the wrong shape");
  }
  if (matrix_.transpose() * g * matrix_ != g) {
    throw Error(ErrorCode::kNotIsometry, "matrix does not preserve the Gram matrix of " +
                                             lattice_->name());
  }
}

Isometry Isometry::identity(LatticePtr lattice) {
  auto n = lattice->rank();
  return Isometry(std::move(lattice), IntMatrix::identity(n));
}

bool Isometry::is_identity() const { return matrix_ == IntMatrix::identity(matrix_.rows()); }

bool operator==(Isometry const& a, Isometry const& b) {
  return a.lattice_->same_as(*b.lattice_) && a.matrix_ == b.matrix_;
}

bool is_reflection_integral(LatticeVector const& x) {
  Integer q = norm(x);
  if (q == 0) throw Error(ErrorCode::kZeroNorm, "reflection in an isotropic vector");
  for (auto const& p : x.lattice()->pairings(x.coords())) {
    if ((2 * p) % q != 0) return false;
  }
  return true;
}

Isometry reflection(LatticeVector const& x) {
  Integer q = norm(x);
  if (q == 0) throw Error(ErrorCode::kZeroNorm, "reflection in an isotropic vector");
  if (q > 0) throw Error(ErrorCode::kPreconditionViolated, "reflection needs norm(x) < 0");
  auto const n = x.size();
  auto pairings = x.lattice()->pairings(x.coords());
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    Integer twice = 2 * pairings[j];
    if (twice % q != 0) {
      throw Error(ErrorCode::kNonIntegral,
                  "reflection is not integral on basis vector " + std::to_string(j));
    }
    Integer k = twice / q;
    for (std::size_t i = 0; i < n; ++i) m(i, j) -= k * x[i];
  }
  return Isometry(x.lattice(), std::move(m));
}

Isometry compose(Isometry const& a, Isometry const& b) {
  require_same_lattice(*a.lattice(), *b.lattice());
  return Isometry(a.lattice(), a.matrix() * b.matrix());
}

Isometry inverse(Isometry const& iso) {
  // M^{-1} = G^{-1} M^T G.
  auto const& g = iso.lattice()->gram();
  IntMatrix rhs = iso.matrix().transpose() * g;
  std::vector<RatVector> columns;
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    RatVector col(rhs.rows());
    for (std::size_t r = 0; r < rhs.rows(); ++r) col[r] = Rational(rhs(r, c));
    columns.push_back(std::move(col));
  }
  auto solved = solve_rational(g, columns);
  IntMatrix m(rhs.rows(), rhs.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      auto const& entry = (*solved)[c][r];
      if (denominator(entry) != 1) throw Error(ErrorCode::kInternalMismatch, "non-integral inverse");
      m(r, c) = numerator(entry);
    }
  }
  return Isometry(iso.lattice(), std::move(m));
}

LatticeVector apply(Isometry const& iso, LatticeVector const& v) {
  require_same_lattice(*iso.lattice(), *v.lattice());
  return LatticeVector(v.lattice(), iso.matrix() * v.coords());
}

std::vector<std::size_t> induced_disc_action(DiscriminantGroup const& group,
                                             Isometry const& iso) {
  require_same_lattice(*group.lattice(), *iso.lattice());
  auto const& m = iso.matrix();
  std::vector<DiscElement> images;
  for (auto const& lift : group.generator_lifts()) {
    RatVector image(lift.size());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(r, c) != 0 && lift[c] != 0) image[r] += Rational(m(r, c)) * lift[c];
    images.push_back(group.class_of(image));
  }
  std::vector<std::size_t> perm(group.order());
  DiscElement zero;
  zero.residues.assign(group.invariant_factors().size(), Integer(0));
  for (std::size_t idx = 0; idx < group.order(); ++idx) {
    auto e = group.element(idx);
    DiscElement acc = zero;
    for (std::size_t k = 0; k < images.size(); ++k) {
      for (Integer t = 0; t < e.residues[k]; ++t) acc = group.add(acc, images[k]);
    }
    perm[idx] = group.index_of(acc);
  }
  return perm;
}

namespace {

bool is_hyperbolic_plane(GramLattice const& lattice, Block const& b) {
  if (b.length != 2) return false;
  auto const& g = lattice.gram();
  return g(b.start, b.start) == 0 && g(b.start + 1, b.start + 1) == 0 &&
         g(b.start, b.start + 1) == 1;
}

std::vector<Block> hyperbolic_planes(GramLattice const& lattice) {
  std::vector<Block> out;
  for (auto const& b : lattice.blocks())
    if (is_hyperbolic_plane(lattice, b)) out.push_back(b);
  return out;
}

// Transvection data with cached pairing vectors.
struct Transvection {
  IntVector e, a, ge, ga;
  Integer half_aa;

  Transvection(GramLattice const& lattice, IntVector e_, IntVector a_)
      : e(std::move(e_)), a(std::move(a_)) {
    ge = lattice.pairings(e);
    ga = lattice.pairings(a);
    half_aa = dot(a, ga) / 2;
  }

  void apply(IntVector& x) const {
    Integer xe = dot(x, ge);
    Integer xa = dot(x, ga);
    Integer ecoef = -xa - half_aa * xe;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (xe != 0 && a[i] != 0) x[i] += xe * a[i];
      if (ecoef != 0 && e[i] != 0) x[i] += ecoef * e[i];
    }
  }

  Transvection inverted(GramLattice const& lattice) const {
    return Transvection(lattice, e, -a);
  }
};

IntMatrix word_matrix(std::size_t n, std::vector<Transvection> const& word) {
  IntMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    IntVector x(n);
    x[c] = 1;
    for (auto const& t : word) t.apply(x);
    for (std::size_t r = 0; r < n; ++r) m(r, c) = x[r];
  }
  return m;
}

// Reduces a vector of an even lattice U + U1 + M to the normal form
// r e + b f + m with 0 <= m_j < r, recording the transvections used.
class EichlerReducer {
 public:
  EichlerReducer(LatticePtr lattice, Block u, Block u1, IntVector x)
      : lattice_(std::move(lattice)), e_(u.start), f_(u.start + 1), e1_(u1.start),
        f1_(u1.start + 1), x_(std::move(x)) {
    for (std::size_t i = 0; i < lattice_->rank(); ++i)
      if (i != e_ && i != f_ && i != e1_ && i != f1_) rest_.push_back(i);
  }

  void reduce() {
    Integer r = gcd(lattice_->pairings(x_));
    smith();
    if (x00() != r) {
      // Pull the gcd of the M-pairings into the U1 plane.
      IntVector p = lattice_->pairings(x_);
      Integer acc = 0;
      IntVector a(lattice_->rank());
      for (std::size_t j : rest_) {
        if (p[j] == 0) continue;
        Integer s, t;
        acc = extended_gcd(acc, p[j], s, t);
        for (std::size_t i : rest_) a[i] *= s;
        a[j] = t;
      }
      push(e1_, std::move(a));
      smith();
    }
    if (x00() != r) {
      throw Error(ErrorCode::kInternalMismatch, "Eichler reduction did not reach the divisibility");
    }
    IntVector a(lattice_->rank());
    bool any = false;
    for (std::size_t j : rest_) {
      a[j] = -floor_div(x_[j], r);
      any = any || a[j] != 0;
    }
    if (any) push(f_, std::move(a));
  }

  IntVector const& vector() const { return x_; }
  std::vector<Transvection> const& word() const { return word_; }

 private:
  // The U + U1 part as the 2x2 matrix [[x_e, x_e1], [-x_f1, x_f]]; the four
  // transvections below act on it by elementary row and column operations.
  Integer const& x00() const { return x_[e_]; }
  Integer const& x01() const { return x_[e1_]; }
  Integer x10() const { return -x_[f1_]; }
  Integer const& x11() const { return x_[f_]; }

  void push(std::size_t isotropic, IntVector a) {
    IntVector e(lattice_->rank());
    e[isotropic] = 1;
    word_.emplace_back(*lattice_, std::move(e), std::move(a));
    word_.back().apply(x_);
  }
  IntVector unit(std::size_t i, Integer const& k) const {
    IntVector a(lattice_->rank());
    a[i] = k;
    return a;
  }
  void row0_add(Integer const& k) { if (k != 0) push(e_, unit(e1_, k)); }   // R0 += k R1
  void row1_sub(Integer const& k) { if (k != 0) push(f_, unit(f1_, k)); }   // R1 -= k R0
  void col0_sub(Integer const& k) { if (k != 0) push(e_, unit(f1_, k)); }   // C0 -= k C1
  void col1_add(Integer const& k) { if (k != 0) push(f_, unit(e1_, k)); }   // C1 += k C0

  void smith() {
    while (true) {
      while (x10() != 0) {
        if (x00() == 0) {
          row0_add(1);
          continue;
        }
        row1_sub(floor_div(x10(), x00()));
        if (x10() != 0) row0_add(-floor_div(x00(), x10()));
      }
      while (x01() != 0) {
        if (x00() == 0) {
          col0_sub(-1);
          continue;
        }
        col1_add(-floor_div(x01(), x00()));
        if (x01() != 0) col0_sub(floor_div(x00(), x01()));
      }
      if (x10() != 0) continue;
      if (x00() == 0) {
        if (x11() == 0) break;
        row0_add(1);
        continue;
      }
      if (x11() % x00() != 0) {
        row0_add(1);
        continue;
      }
      break;
    }
    if (x00() < 0) {
      for (int twice = 0; twice < 2; ++twice) {
        row0_add(1);
        row1_sub(1);
        row0_add(1);
      }
    }
  }

  LatticePtr lattice_;
  std::size_t e_, f_, e1_, f1_;
  std::vector<std::size_t> rest_;
  IntVector x_;
  std::vector<Transvection> word_;
};

std::pair<Block, Block> require_u_square(GramLattice const& lattice) {
  auto planes = hyperbolic_planes(lattice);
  if (planes.size() < 2) {
    throw Error(ErrorCode::kNoUSquare, lattice.name() + " has fewer than two U blocks");
  }
  if (!lattice.is_even()) {
    throw Error(ErrorCode::kPreconditionViolated, "Eichler transvections need an even lattice");
  }
  return {planes[0], planes[1]};
}

EichlerReducer reduce(LatticeVector const& v) {
  auto [u, u1] = require_u_square(*v.lattice());
  if (v.is_zero() || !is_primitive(v)) {
    throw Error(ErrorCode::kPreconditionViolated, "Eichler normalization needs primitive vectors");
  }
  EichlerReducer reducer(v.lattice(), u, u1, v.coords());
  reducer.reduce();
  return reducer;
}

}  // namespace

Isometry eichler_transvection(LatticeVector const& e, LatticeVector const& a) {
  require_same_lattice(*e.lattice(), *a.lattice());
  auto const& lattice = *e.lattice();
  if (!lattice.is_even()) {
    throw Error(ErrorCode::kPreconditionViolated, "Eichler transvections need an even lattice");
  }
  bool inside_plane = false;
  for (auto const& b : hyperbolic_planes(lattice)) {
    bool supported = true;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0 && (i < b.start || i >= b.start + b.length)) supported = false;
    inside_plane = inside_plane || supported;
  }
  if (e.is_zero() || !inside_plane || norm(e) != 0 || !is_primitive(e)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "e must be primitive and isotropic inside a U block");
  }
  if (pairing(e, a) != 0) throw Error(ErrorCode::kPreconditionViolated, "(e, a) must vanish");
  Transvection t(lattice, e.coords(), a.coords());
  return Isometry(e.lattice(), word_matrix(lattice.rank(), {t}));
}

LatticeVector eichler_normal_form(LatticeVector const& v) {
  return LatticeVector(v.lattice(), reduce(v).vector());
}

Isometry eichler_normalize(LatticeVector const& v, LatticeVector const& w) {
  require_same_lattice(*v.lattice(), *w.lattice());
  auto const& lattice = v.lattice();
  require_u_square(*lattice);
  if (v.is_zero() || w.is_zero() || !is_primitive(v) || !is_primitive(w)) {
    throw Error(ErrorCode::kPreconditionViolated, "Eichler normalization needs primitive vectors");
  }
  std::string failures;
  Integer const r = divisibility(v);
  if (norm(v) != norm(w)) failures += " square";
  if (divisibility(w) != r) {
    failures += " divisibility";
  } else {
    auto group = discriminant_group(lattice);
    if (disc_residue(group, v, r) != disc_residue(group, w, r)) failures += " residue";
  }
  if (!failures.empty()) {
    throw Error(ErrorCode::kInvariantMismatch, "conditions failing:" + failures);
  }

  auto rv = reduce(v);
  auto rw = reduce(w);
  if (rv.vector() != rw.vector()) {
    throw Error(ErrorCode::kInternalMismatch, "normal forms differ for matching invariants");
  }
  std::vector<Transvection> word = rv.word();
  for (auto it = rw.word().rbegin(); it != rw.word().rend(); ++it) {
    word.push_back(it->inverted(*lattice));
  }
  Isometry phi(lattice, word_matrix(lattice->rank(), word));
  if (apply(phi, v) != w) {
    throw Error(ErrorCode::kInternalMismatch, "normalizing isometry misses the target");
  }
  return phi;
}

std::vector<std::vector<std::size_t>> orbits(
    std::vector<std::vector<std::size_t>> const& generators, std::size_t domain_size) {
  for (auto const& g : generators) {
    if (g.size() != domain_size) {
      throw Error(ErrorCode::kInvalidArgument, "permutation size differs from the domain");
    }
  }
  std::vector<bool> seen(domain_size, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < domain_size; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit{start};
    std::deque<std::size_t> frontier{start};
    seen[start] = true;
    while (!frontier.empty()) {
      auto x = frontier.front();
      frontier.pop_front();
      for (auto const& g : generators) {
        auto y = g[x];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
          frontier.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Isometry> e8_simple_root_reflections(LatticePtr const& lattice,
                                                 std::string_view block) {
  auto const* b = lattice->find_block(block);
  if (b == nullptr) {
    throw Error(ErrorCode::kUnknownBlock, "no block '" + std::string(block) + "'");
  }
  auto sub = block_lattice(*lattice, block)->gram();
  IntMatrix e8m2 = e8_minus2_gram();
  IntMatrix e8m1 = e8m2;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) e8m1(r, c) /= 2;
  if (sub != e8m2 && sub != e8m1) {
    throw Error(ErrorCode::kInvalidArgument, "block '" + std::string(block) + "' is not of E8 type");
  }
  std::vector<Isometry> out;
  for (std::size_t k = 0; k < 8; ++k) {
    out.push_back(reflection(LatticeVector::basis(lattice, b->start + k)));
  }
  return out;
}

}  // namespace wallkit
