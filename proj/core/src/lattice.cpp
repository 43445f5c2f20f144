#include "wallkit/lattice.hpp"

#include <map>
#include <utility>

#include "wallkit/error.hpp"
#include "wallkit/linalg.hpp"

namespace wallkit {

GramLattice::GramLattice(std::string name, IntMatrix gram,
                         std::vector<Block> blocks)
    : name_(std::move(name)), gram_(std::move(gram)), blocks_(std::move(blocks)) {
  if (gram_.rows() == 0 || !gram_.is_symmetric()) {
    throw Error(ErrorCode::kInvalidArgument,
                "Gram matrix of " + name_ + " must be square, symmetric, nonempty");
  }
  if (blocks_.empty()) blocks_.push_back({name_, 0, rank()});
  std::vector<int> owner(rank(), -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    auto const& block = blocks_[b];
    if (block.length == 0 || block.start + block.length > rank()) {
      throw Error(ErrorCode::kInvalidArgument, "block " + block.name + " out of range");
    }
    for (std::size_t i = block.start; i < block.start + block.length; ++i) {
      if (owner[i] != -1) {
        throw Error(ErrorCode::kInvalidArgument, "overlapping blocks in " + name_);
      }
      owner[i] = static_cast<int>(b);
    }
  }
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = i + 1; j < rank(); ++j) {
      if (gram_(i, j) != 0 && owner[i] != owner[j]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "blocks of " + name_ + " are not mutually orthogonal");
      }
    }
  }
  determinant_ = wallkit::determinant(gram_);
  if (determinant_ == 0) {
    throw Error(ErrorCode::kDegenerate, "Gram matrix of " + name_ + " is degenerate");
  }
}

bool GramLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

Block const* GramLattice::find_block(std::string_view name) const {
  for (auto const& b : blocks_)
    if (b.name == name) return &b;
  return nullptr;
}

IntVector GramLattice::pairings(IntVector const& x) const { return gram_ * x; }

bool GramLattice::same_as(GramLattice const& other) const {
  return this == &other || (gram_ == other.gram_ && blocks_ == other.blocks_);
}

LatticePtr make_lattice(std::string name, IntMatrix gram, std::vector<Block> blocks) {
  return std::make_shared<GramLattice const>(std::move(name), std::move(gram),
                                             std::move(blocks));
}

LatticeVector::LatticeVector(LatticePtr lattice, IntVector coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (coords_.size() != lattice_->rank()) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(lattice_->rank()) + " coordinates for " +
                    lattice_->name() + ", got " + std::to_string(coords_.size()));
  }
}

LatticeVector LatticeVector::zero(LatticePtr lattice) {
  auto n = lattice->rank();
  return LatticeVector(std::move(lattice), IntVector(n));
}

LatticeVector LatticeVector::basis(LatticePtr lattice, std::size_t index) {
  IntVector c(lattice->rank());
  c.at(index) = 1;
  return LatticeVector(std::move(lattice), std::move(c));
}

bool LatticeVector::is_zero() const {
  for (auto const& c : coords_)
    if (c != 0) return false;
  return true;
}

void require_same_lattice(GramLattice const& a, GramLattice const& b) {
  if (!a.same_as(b)) {
    throw Error(ErrorCode::kLatticeMismatch, a.name() + " vs " + b.name());
  }
}

LatticeVector LatticeVector::operator+(LatticeVector const& other) const {
  require_same_lattice(*lattice_, *other.lattice_);
  return LatticeVector(lattice_, coords_ + other.coords_);
}

LatticeVector LatticeVector::operator-(LatticeVector const& other) const {
  require_same_lattice(*lattice_, *other.lattice_);
  return LatticeVector(lattice_, coords_ - other.coords_);
}

LatticeVector LatticeVector::operator-() const { return LatticeVector(lattice_, -coords_); }

LatticeVector operator*(Integer const& k, LatticeVector const& v) {
  return LatticeVector(v.lattice_, k * v.coords_);
}

bool operator==(LatticeVector const& a, LatticeVector const& b) {
  return a.lattice_->same_as(*b.lattice_) && a.coords_ == b.coords_;
}

IntMatrix e8_minus2_gram() {
  return IntMatrix(8, 8, {-4, 2,  0,  0,  0,  0,  0,  0,
                           2, -4, 2,  0,  0,  0,  0,  0,
                           0, 2,  -4, 2,  0,  0,  0,  0,
                           0, 0,  2,  -4, 2,  0,  0,  0,
                           0, 0,  0,  2,  -4, 2,  0,  2,
                           0, 0,  0,  0,  2,  -4, 2,  0,
                           0, 0,  0,  0,  0,  2,  -4, 0,
                           0, 0,  0,  0,  2,  0,  0,  -4});
}

namespace {

LatticePtr standard_u(Integer const& n) {
  std::string name = n == 1 ? "U" : "U(" + n.str() + ")";
  IntMatrix g(2, 2);
  g(0, 1) = n;
  g(1, 0) = n;
  return make_lattice(name, g);
}

LatticePtr standard_e8(int scale) {
  IntMatrix g = e8_minus2_gram();
  if (scale == -1) {
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c) g(r, c) /= 2;
  }
  return make_lattice(scale == -1 ? "E8(-1)" : "E8(-2)", g);
}

LatticePtr standard_rank1(Integer const& n) {
  IntMatrix g(1, 1);
  g(0, 0) = -n;
  return make_lattice("(-" + n.str() + ")", g);
}

// Parses "<prefix><int><suffix>", e.g. "U(2)" -> 2.
bool parse_parameter(std::string_view name, std::string_view prefix,
                     std::string_view suffix, Integer& out) {
  if (name.size() <= prefix.size() + suffix.size()) return false;
  if (name.substr(0, prefix.size()) != prefix) return false;
  if (name.substr(name.size() - suffix.size()) != suffix) return false;
  auto digits = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
  for (char c : digits)
    if (c < '0' || c > '9') return false;
  out = Integer(std::string(digits));
  return out > 0;
}

}  // namespace

LatticePtr make_standard(std::string_view name) {
  Integer n;
  if (name == "U") return standard_u(1);
  if (parse_parameter(name, "U(", ")", n)) return standard_u(n);
  if (name == "E8(-1)" || name == "E8m1") return standard_e8(-1);
  if (name == "E8(-2)" || name == "E8m2") return standard_e8(-2);
  if (parse_parameter(name, "(-", ")", n)) return standard_rank1(n);

  auto u = standard_u(1);
  auto u2 = standard_u(2);
  auto e8m1 = standard_e8(-1);
  auto e8m2 = standard_e8(-2);
  auto m1 = standard_rank1(1);
  auto m2 = standard_rank1(2);
  if (name == "Lambda") {
    return rename_blocks(direct_sum({u2, u2, u2, e8m1, m2, m2}),
                         {"U(2)_1", "U(2)_2", "U(2)_3", "E8(-1)", "h1", "h2"}, "Lambda");
  }
  if (name == "LambdaHat") {
    return rename_blocks(direct_sum({u, u, u, e8m2, m1, m1}),
                         {"U_1", "U_2", "U_3", "E8(-2)", "hhat1", "hhat2"}, "LambdaHat");
  }
  if (name == "LambdaHat1") {
    return rename_blocks(direct_sum({u, u, u, e8m2, m2, m2}),
                         {"U_1", "U_2", "U_3", "E8(-2)", "delta", "sigma"}, "LambdaHat1");
  }
  if (name == "LambdaHat2") {
    return rename_blocks(direct_sum({u, u, u, e8m2, m2}),
                         {"U_1", "U_2", "U_3", "E8(-2)", "delta"}, "LambdaHat2");
  }
  if (name == "LambdaHat3") {
    return rename_blocks(direct_sum({u, u, u, m2}), {"U_1", "U_2", "U_3", "delta"},
                         "LambdaHat3");
  }
  if (name == "LambdaK3") {
    return rename_blocks(direct_sum({u, u, u, e8m1, e8m1}),
                         {"U_1", "U_2", "U_3", "E8(-1)_1", "E8(-1)_2"}, "LambdaK3");
  }
  if (name == "LambdaK3[2]") {
    return rename_blocks(direct_sum({u, u, u, e8m1, e8m1, m2}),
                         {"U_1", "U_2", "U_3", "E8(-1)_1", "E8(-1)_2", "delta"},
                         "LambdaK3[2]");
  }
  throw Error(ErrorCode::kUnknownName, "unknown standard lattice '" + std::string(name) + "'");
}

LatticePtr direct_sum(std::vector<LatticePtr> const& parts, std::string name) {
  if (parts.empty()) throw Error(ErrorCode::kInvalidArgument, "direct_sum of nothing");
  if (parts.size() == 1 && name.empty()) return parts.front();

  std::size_t rank = 0;
  for (auto const& p : parts) rank += p->rank();
  IntMatrix gram(rank, rank);
  std::vector<Block> blocks;
  std::size_t offset = 0;
  for (auto const& p : parts) {
    for (std::size_t r = 0; r < p->rank(); ++r)
      for (std::size_t c = 0; c < p->rank(); ++c)
        gram(offset + r, offset + c) = p->gram()(r, c);
    for (auto const& b : p->blocks()) blocks.push_back({b.name, offset + b.start, b.length});
    offset += p->rank();
  }

  std::map<std::string, int> totals, seen;
  for (auto const& b : blocks) ++totals[b.name];
  for (auto& b : blocks) {
    if (totals[b.name] > 1) b.name += "_" + std::to_string(++seen[b.name]);
  }
  if (name.empty()) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      name += (i ? "+" : "") + parts[i]->name();
    }
  }
  return make_lattice(std::move(name), std::move(gram), std::move(blocks));
}

LatticePtr rescale(LatticePtr const& lattice, Integer const& n, std::string name) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "rescale by 0");
  if (n == 1 && name.empty()) return lattice;
  IntMatrix g = lattice->gram();
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) g(r, c) *= n;
  if (name.empty()) name = lattice->name() + "(" + n.str() + ")";
  auto blocks = lattice->blocks();
  if (blocks.size() == 1 && blocks.front().name == lattice->name()) blocks.front().name = name;
  return make_lattice(std::move(name), std::move(g), std::move(blocks));
}

LatticePtr rename_blocks(LatticePtr const& lattice, std::vector<std::string> const& names,
                         std::string name) {
  auto blocks = lattice->blocks();
  if (names.size() != blocks.size()) {
    throw Error(ErrorCode::kInvalidArgument, "block name count mismatch");
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i].name = names[i];
  return make_lattice(name.empty() ? lattice->name() : std::move(name), lattice->gram(),
                      std::move(blocks));
}

Integer pairing(LatticeVector const& v, LatticeVector const& w) {
  require_same_lattice(*v.lattice(), *w.lattice());
  return dot(v.coords(), v.lattice()->pairings(w.coords()));
}

Integer norm(LatticeVector const& v) { return pairing(v, v); }

Integer divisibility(LatticeVector const& v) {
  if (v.is_zero()) throw Error(ErrorCode::kZeroVector, "divisibility of the zero vector");
  return gcd(v.lattice()->pairings(v.coords()));
}

bool is_primitive(LatticeVector const& v) {
  if (v.is_zero()) throw Error(ErrorCode::kZeroVector, "primitivity of the zero vector");
  return gcd(v.coords()) == 1;
}

LatticeVector primitive_part(LatticeVector const& v) {
  if (v.is_zero()) throw Error(ErrorCode::kZeroVector, "primitive part of the zero vector");
  Integer g = gcd(v.coords());
  IntVector c = v.coords();
  for (auto& x : c) x /= g;
  return LatticeVector(v.lattice(), std::move(c));
}

namespace {

std::vector<Block> resolve_blocks(GramLattice const& lattice, std::string_view name) {
  if (auto const* b = lattice.find_block(name)) return {*b};
  std::vector<Block> out;
  auto caret = name.rfind('^');
  if (caret != std::string_view::npos) {
    std::string prefix = std::string(name.substr(0, caret)) + "_";
    for (auto const& b : lattice.blocks()) {
      if (b.name.size() > prefix.size() && b.name.compare(0, prefix.size(), prefix) == 0 &&
          b.name.find_first_not_of("0123456789", prefix.size()) == std::string::npos) {
        out.push_back(b);
      }
    }
  }
  if (out.empty()) {
    throw Error(ErrorCode::kUnknownBlock,
                "no block '" + std::string(name) + "' in " + lattice.name());
  }
  return out;
}

}  // namespace

LatticeVector project_blocks(LatticeVector const& v, std::span<std::string const> names) {
  IntVector c(v.size());
  for (auto const& name : names) {
    for (auto const& b : resolve_blocks(*v.lattice(), name)) {
      for (std::size_t i = b.start; i < b.start + b.length; ++i) c[i] = v[i];
    }
  }
  return LatticeVector(v.lattice(), std::move(c));
}

LatticeVector project_block(LatticeVector const& v, std::string_view block) {
  std::string const name(block);
  return project_blocks(v, std::span<std::string const>(&name, 1));
}

IntVector block_coords(LatticeVector const& v, std::string_view block) {
  auto const* b = v.lattice()->find_block(block);
  if (b == nullptr) {
    throw Error(ErrorCode::kUnknownBlock,
                "no block '" + std::string(block) + "' in " + v.lattice()->name());
  }
  return IntVector(v.coords().begin() + static_cast<std::ptrdiff_t>(b->start),
                   v.coords().begin() + static_cast<std::ptrdiff_t>(b->start + b->length));
}

LatticePtr block_lattice(GramLattice const& lattice, std::string_view block) {
  auto const* b = lattice.find_block(block);
  if (b == nullptr) {
    throw Error(ErrorCode::kUnknownBlock,
                "no block '" + std::string(block) + "' in " + lattice.name());
  }
  IntMatrix g(b->length, b->length);
  for (std::size_t r = 0; r < b->length; ++r)
    for (std::size_t c = 0; c < b->length; ++c) g(r, c) = lattice.gram()(b->start + r, b->start + c);
  return make_lattice(b->name, std::move(g));
}

}  // namespace wallkit
