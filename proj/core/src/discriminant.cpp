#include "wallkit/discriminant.hpp"

#include <limits>
#include <utility>

#include "wallkit/error.hpp"
#include "wallkit/linalg.hpp"

namespace wallkit {

bool DiscElement::is_zero() const {
  for (auto const& r : residues)
    if (r != 0) return false;
  return true;
}

DiscriminantGroup::DiscriminantGroup(LatticePtr lattice) : lattice_(std::move(lattice)) {
  auto const& gram = lattice_->gram();
  std::size_t const n = lattice_->rank();
  SmithForm snf = smith_normal_form(gram);
  auto diag = snf.diagonal();

  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (diag[i] == 0) throw Error(ErrorCode::kDegenerate, lattice_->name());
    if (diag[i] > 1) rows.push_back(i);
  }
  projection_ = IntMatrix(rows.size(), n);
  std::vector<RatVector> pairing_columns;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    factors_.push_back(diag[rows[k]]);
    for (std::size_t c = 0; c < n; ++c) projection_(k, c) = snf.u(rows[k], c);
    RatVector y(n);
    for (std::size_t r = 0; r < n; ++r) y[r] = Rational(snf.u_inverse(r, rows[k]));
    pairing_columns.push_back(std::move(y));
  }
  if (!pairing_columns.empty()) {
    auto solved = solve_rational(gram, pairing_columns);
    if (!solved) throw Error(ErrorCode::kDegenerate, lattice_->name());
    lifts_ = std::move(*solved);
  }
  for (auto const& f : factors_) {
    if (f > Integer(std::numeric_limits<std::size_t>::max() / order_)) {
      throw Error(ErrorCode::kInvalidArgument, "discriminant group too large to enumerate");
    }
    order_ *= static_cast<std::size_t>(f);
  }
}

DiscElement DiscriminantGroup::element(std::size_t index) const {
  DiscElement e;
  e.residues.resize(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    auto f = static_cast<std::size_t>(factors_[k]);
    e.residues[k] = index % f;
    index /= f;
  }
  return e;
}

std::size_t DiscriminantGroup::index_of(DiscElement const& e) const {
  std::size_t index = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    index = index * static_cast<std::size_t>(factors_[k]) +
            static_cast<std::size_t>(floor_mod(e.residues[k], factors_[k]));
  }
  return index;
}

DiscElement DiscriminantGroup::class_of_pairings(IntVector const& pairings) const {
  DiscElement e;
  e.residues = projection_ * pairings;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    e.residues[k] = floor_mod(e.residues[k], factors_[k]);
  }
  return e;
}

DiscElement DiscriminantGroup::class_of(RatVector const& x) const {
  auto const& gram = lattice_->gram();
  IntVector y(x.size());
  for (std::size_t r = 0; r < x.size(); ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < x.size(); ++c) acc += Rational(gram(r, c)) * x[c];
    if (denominator(acc) != 1) {
      throw Error(ErrorCode::kNotInDual, "vector is not in the dual lattice");
    }
    y[r] = numerator(acc);
  }
  return class_of_pairings(y);
}

RatVector DiscriminantGroup::lift(DiscElement const& e) const {
  RatVector x(lattice_->rank());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (e.residues[k] == 0) continue;
    Rational coeff(e.residues[k]);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += coeff * lifts_[k][i];
  }
  return x;
}

namespace {

Rational bilinear(IntMatrix const& gram, RatVector const& a, RatVector const& b) {
  Rational acc = 0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r] == 0) continue;
    for (std::size_t c = 0; c < b.size(); ++c) {
      if (b[c] != 0 && gram(r, c) != 0) acc += a[r] * Rational(gram(r, c)) * b[c];
    }
  }
  return acc;
}

}  // namespace

Rational DiscriminantGroup::qbar(DiscElement const& e) const {
  if (!lattice_->is_even()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "discriminant quadratic form needs an even lattice");
  }
  auto x = lift(e);
  return mod_rational(bilinear(lattice_->gram(), x, x), 2);
}

Rational DiscriminantGroup::bbar(DiscElement const& a, DiscElement const& b) const {
  return mod_rational(bilinear(lattice_->gram(), lift(a), lift(b)), 1);
}

DiscElement DiscriminantGroup::add(DiscElement const& a, DiscElement const& b) const {
  DiscElement e;
  e.residues.resize(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    e.residues[k] = floor_mod(a.residues[k] + b.residues[k], factors_[k]);
  }
  return e;
}

DiscriminantGroup discriminant_group(LatticePtr const& lattice) {
  return DiscriminantGroup(lattice);
}

DiscElement disc_residue(DiscriminantGroup const& group, LatticeVector const& v,
                         Integer const& divisor) {
  require_same_lattice(*group.lattice(), *v.lattice());
  if (divisor <= 0) throw Error(ErrorCode::kInvalidArgument, "divisor must be positive");
  IntVector y = v.lattice()->pairings(v.coords());
  for (auto& p : y) {
    if (p % divisor != 0) {
      throw Error(ErrorCode::kNotInDual,
                  "v/" + divisor.str() + " is not in the dual lattice");
    }
    p /= divisor;
  }
  return group.class_of_pairings(y);
}

}  // namespace wallkit
