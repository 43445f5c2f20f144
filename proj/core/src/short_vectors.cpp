#include "wallkit/short_vectors.hpp"

#include <algorithm>
#include <cmath>

#include "wallkit/error.hpp"
#include "wallkit/linalg.hpp"

namespace wallkit {

namespace {

struct Enumerator {
  std::size_t n;
  std::vector<RatVector> lower;  // unit lower-triangular factor, lower[i][k], i > k
  RatVector pivots;
  Rational bound;
  IntVector x;
  std::vector<IntVector> found;

  // Largest integer u with u + c <= sqrt(t).
  static Integer upper_end(Rational const& c, Rational const& t) {
    double approx = -c.convert_to<double>() + std::sqrt(std::max(0.0, t.convert_to<double>()));
    Integer u = static_cast<long long>(std::floor(approx));
    auto fits = [&](Integer const& cand) {
      Rational s = Rational(cand) + c;
      return s <= 0 || s * s <= t;
    };
    while (fits(u + 1)) ++u;
    while (!fits(u)) --u;
    return u;
  }

  // Smallest integer l with l + c >= -sqrt(t).
  static Integer lower_end(Rational const& c, Rational const& t) {
    double approx = -c.convert_to<double>() - std::sqrt(std::max(0.0, t.convert_to<double>()));
    Integer l = static_cast<long long>(std::ceil(approx));
    auto fits = [&](Integer const& cand) {
      Rational s = Rational(cand) + c;
      return s >= 0 || s * s <= t;
    };
    while (fits(l - 1)) --l;
    while (!fits(l)) ++l;
    return l;
  }

  void recurse(std::size_t level, Rational const& remaining) {
    Rational center = 0;
    for (std::size_t i = level + 1; i < n; ++i) {
      if (x[i] != 0) center += lower[i][level] * Rational(x[i]);
    }
    Rational t = remaining / pivots[level];
    Integer lo = lower_end(center, t);
    Integer hi = upper_end(center, t);
    for (Integer v = lo; v <= hi; ++v) {
      x[level] = v;
      Rational s = Rational(v) + center;
      Rational rest = remaining - pivots[level] * s * s;
      if (level == 0) {
        found.push_back(x);
      } else {
        recurse(level - 1, rest);
      }
    }
    x[level] = 0;
  }
};

}  // namespace

std::vector<IntVector> short_vectors(IntMatrix const& gram, std::set<Integer> const& norms) {
  std::size_t const n = gram.rows();
  IntMatrix positive = gram;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) positive(r, c) = -gram(r, c);
  if (!is_positive_definite(positive)) {
    throw Error(ErrorCode::kNotNegativeDefinite, "short vector enumeration needs a definite form");
  }
  if (norms.empty()) return {};
  for (auto const& q : norms) {
    if (q >= 0) throw Error(ErrorCode::kInvalidArgument, "requested norms must be negative");
  }

  Enumerator e;
  e.n = n;
  e.lower.assign(n, RatVector(n));
  e.pivots.assign(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    Rational d = Rational(positive(k, k));
    for (std::size_t j = 0; j < k; ++j) d -= e.lower[k][j] * e.lower[k][j] * e.pivots[j];
    e.pivots[k] = d;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational s = Rational(positive(i, k));
      for (std::size_t j = 0; j < k; ++j) s -= e.lower[i][j] * e.lower[k][j] * e.pivots[j];
      e.lower[i][k] = s / d;
    }
  }
  e.bound = Rational(-*norms.begin());
  e.x.assign(n, Integer(0));
  e.recurse(n - 1, e.bound);

  std::vector<IntVector> out;
  for (auto& v : e.found) {
    Integer q = dot(v, gram * v);
    if (q != 0 && norms.count(q)) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> short_vectors(LatticePtr const& lattice,
                                         std::set<Integer> const& norms) {
  auto coords = short_vectors(lattice->gram(), norms);
  std::vector<LatticeVector> out;
  out.reserve(coords.size());
  for (auto& c : coords) out.emplace_back(lattice, std::move(c));
  return out;
}

}  // namespace wallkit
