#include "wallkit/walls.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "wallkit/classifier.hpp"
#include "wallkit/error.hpp"
#include "wallkit/linalg.hpp"
#include "wallkit/nikulin.hpp"
#include "wallkit/parallel.hpp"
#include "wallkit/short_vectors.hpp"

namespace wallkit {

PicardEmbedding::PicardEmbedding(LatticePtr ambient, std::vector<LatticeVector> basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  if (basis_.empty()) throw Error(ErrorCode::kInvalidArgument, "Picard basis is empty");
  std::vector<IntVector> rows;
  for (auto const& b : basis_) {
    require_same_lattice(*ambient_, *b.lattice());
    rows.push_back(b.coords());
  }
  if (lattice_basis(rows).size() != basis_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "Picard basis is linearly dependent");
  }
  std::size_t const k = basis_.size();
  induced_gram_ = IntMatrix(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) induced_gram_(r, c) = pairing(basis_[r], basis_[c]);
}

LatticeVector PicardEmbedding::embed(IntVector const& coefficients) const {
  if (coefficients.size() != basis_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "coefficient count differs from the Picard rank");
  }
  IntVector x(ambient_->rank());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (coefficients[k] == 0) continue;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += coefficients[k] * basis_[k][i];
  }
  return LatticeVector(ambient_, std::move(x));
}

bool PicardEmbedding::is_saturated() const {
  std::vector<IntVector> columns;
  for (auto const& b : basis_) columns.push_back(b.coords());
  for (auto const& d : smith_normal_form(IntMatrix::from_columns(columns)).diagonal()) {
    if (d != 0 && d != 1) return false;
  }
  return true;
}

std::string_view wall_rule_name(WallRule rule) {
  switch (rule) {
    case WallRule::kNikulin: return "Nikulin";
    case WallRule::kK3: return "K3";
    case WallRule::kK3n2: return "K3[2]";
  }
  return "unknown";
}

bool is_wall(LatticeVector const& D) { return is_wall(D, WallRule::kNikulin); }

bool is_wall(LatticeVector const& D, WallRule rule) {
  if (D.is_zero()) throw Error(ErrorCode::kZeroVector, "wall test of the zero vector");
  LatticeVector p = primitive_part(D);
  Integer q = norm(p);
  switch (rule) {
    case WallRule::kK3:
      return q == -2;
    case WallRule::kK3n2:
      return q == -2 || (q == -10 && divisibility(p) == 2);
    case WallRule::kNikulin:
      break;
  }
  require_same_lattice(*p.lattice(), *lambda_lattice());
  if (q != -2 && q != -4 && q != -6 && q != -12) return false;
  Integer d = divisibility(p);
  if (q == -2) return d == 1;
  if (d != 2) return false;
  if (q != -12) return true;
  for (std::size_t k = 0; k < kE8Start; ++k)
    if (p[k] % 2 != 0) return false;
  return true;
}

namespace {

bool leading_positive(IntVector const& x) {
  for (auto const& c : x)
    if (c != 0) return c > 0;
  return false;
}

WallReport enumerate(PicardEmbedding const& pic, WallRule rule,
                     std::optional<LatticeVector> const& reference) {
  if (!pic.is_saturated()) {
    throw Error(ErrorCode::kNotSaturated, "Picard basis does not span a primitive sublattice");
  }
  std::set<Integer> norms;
  switch (rule) {
    case WallRule::kNikulin: norms = {-2, -4, -6, -12}; break;
    case WallRule::kK3: norms = {-2}; break;
    case WallRule::kK3n2: norms = {-2, -10}; break;
  }
  if (reference) require_same_lattice(*pic.ambient(), *reference->lattice());

  auto coefficient_vectors = short_vectors(pic.induced_gram(), norms);
  std::vector<std::optional<WallEntry>> slots(coefficient_vectors.size());
  parallel_for(coefficient_vectors.size(), [&](std::size_t idx) {
    IntVector const& c = coefficient_vectors[idx];
    if (gcd(c) != 1) return;
    LatticeVector x = pic.embed(c);
    if (!is_wall(x, rule)) return;
    if (reference) {
      Integer s = pairing(x, *reference);
      if (s == 0) throw Error(ErrorCode::kOmegaOnWall, "reference class is orthogonal to a wall");
      if (s < 0) return;
    } else if (!leading_positive(x.coords())) {
      return;
    }
    WallEntry entry{x, norm(x), divisibility(x), std::nullopt};
    if (rule == WallRule::kNikulin) entry.case_id = classify_lambda(x).case_id;
    slots[idx] = std::move(entry);
  });

  WallReport report;
  report.complete = true;
  for (auto& s : slots)
    if (s) report.walls.push_back(std::move(*s));
  std::sort(report.walls.begin(), report.walls.end(),
            [](WallEntry const& a, WallEntry const& b) { return a.ray.coords() < b.ray.coords(); });
  return report;
}

}  // namespace

WallReport walls_in_picard(PicardEmbedding const& pic,
                           std::optional<LatticeVector> const& reference) {
  require_same_lattice(*pic.ambient(), *lambda_lattice());
  return enumerate(pic, WallRule::kNikulin, reference);
}

WallReport k3_family_walls(WallRule kind, PicardEmbedding const& pic) {
  if (kind == WallRule::kK3) {
    require_same_lattice(*pic.ambient(), *make_standard("LambdaK3"));
  } else if (kind == WallRule::kK3n2) {
    require_same_lattice(*pic.ambient(), *make_standard("LambdaK3[2]"));
  } else {
    throw Error(ErrorCode::kInvalidArgument, "k3_family_walls takes the K3 or K3[2] rule");
  }
  return enumerate(pic, kind, std::nullopt);
}

bool kahler_side_test(LatticeVector const& alpha, LatticeVector const& omega,
                      WallReport const& walls) {
  require_same_lattice(*alpha.lattice(), *omega.lattice());
  if (norm(omega) <= 0) throw Error(ErrorCode::kNotPositive, "omega must have positive norm");
  bool inside = norm(alpha) > 0 && pairing(alpha, omega) > 0;
  for (auto const& w : walls.walls) {
    Integer s = pairing(w.ray, omega);
    if (s == 0) throw Error(ErrorCode::kOmegaOnWall, "omega is orthogonal to a wall");
    Integer t = pairing(w.ray, alpha);
    if (s < 0) t = -t;
    if (t <= 0) inside = false;
  }
  return inside;
}

std::vector<IntVector> orthocomplement_basis(LatticeVector const& v, Integer const& div) {
  if (div <= 0) throw Error(ErrorCode::kInvalidArgument, "divisibility must be positive");
  auto const& lattice = *v.lattice();
  std::size_t const n = lattice.rank();
  IntVector gv = lattice.pairings(v.coords());
  // Kernel of [[G, -div I], [(Gv)^T, 0]] on pairs (x, y) with G x = div y.
  IntMatrix m(n + 1, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = lattice.gram()(r, c);
    m(r, n + r) = -div;
  }
  for (std::size_t c = 0; c < n; ++c) m(n, c) = gv[c];
  std::vector<IntVector> xs;
  for (auto const& k : integer_kernel(m)) xs.emplace_back(k.begin(), k.begin() + n);
  return lattice_basis(xs);
}

ScanReport orthocomplement_square_scan(LatticeVector const& v, Integer const& div,
                                       std::size_t sample_count,
                                       std::optional<Integer> const& target_q,
                                       std::uint64_t seed) {
  if (v.is_zero() || !is_primitive(v)) {
    throw Error(ErrorCode::kPreconditionViolated, "scan needs a primitive vector");
  }
  auto basis = orthocomplement_basis(v, div);
  constexpr int kMaxTries = 256;
  constexpr int kRange = 2;

  struct Sample {
    bool ok = false;
    Integer q;
    std::size_t tries = 0;
  };
  std::vector<Sample> samples(sample_count);
  parallel_for(sample_count, [&](std::size_t idx) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (idx + 1));
    std::uniform_int_distribution<int> coefficient(-kRange, kRange);
    Sample& s = samples[idx];
    for (int t = 0; t < kMaxTries; ++t) {
      ++s.tries;
      IntVector x(v.size());
      for (auto const& b : basis) {
        int k = coefficient(rng);
        if (k == 0) continue;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += k * b[i];
      }
      LatticeVector candidate(v.lattice(), std::move(x));
      if (candidate.is_zero() || !is_primitive(candidate) || divisibility(candidate) != div) {
        continue;
      }
      s.ok = true;
      s.q = norm(candidate);
      return;
    }
  });

  ScanReport report;
  report.requested = sample_count;
  for (auto const& s : samples) {
    report.attempts += s.tries;
    if (!s.ok) continue;
    ++report.accepted;
    ++report.q_mod4[static_cast<int>(floor_mod(s.q, 4))];
    if (target_q && s.q == *target_q) ++report.target_hits;
  }
  return report;
}

}  // namespace wallkit
