#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "expect_error.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "wallkit/classifier.hpp"
#include "wallkit/isometry.hpp"
#include "wallkit/linalg.hpp"
#include "wallkit/nikulin.hpp"

using namespace wallkit;

namespace {

bool acts_trivially(Isometry const& iso) {
  auto group = discriminant_group(iso.lattice());
  auto perm = induced_disc_action(group, iso);
  for (std::size_t k = 0; k < perm.size(); ++k)
    if (perm[k] != k) return false;
  return true;
}

LatticeVector hat3(std::initializer_list<long long> c) {
  return LatticeVector(make_standard("LambdaHat3"), make_vector(c));
}

}  // namespace

TEST(Reflection, DeltaHat) {
  using namespace named;
  auto r = reflection(delta_hat());
  EXPECT_EQ(apply(r, delta_hat()), -delta_hat());
  EXPECT_EQ(apply(r, sigma_hat()), sigma_hat());
}

TEST(Reflection, IntegralityCases) {
  using namespace named;
  EXPECT_TRUE(is_reflection_integral(h2()));
  EXPECT_NO_THROW(reflection(h2()));
  auto hat = lambda_hat_lattice();
  LatticeVector x(hat, make_vector({0, 0, 1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(norm(x), -4);
  EXPECT_FALSE(is_reflection_integral(x));
  EXPECT_WALLKIT_ERROR(reflection(x), ErrorCode::kNonIntegral);
  EXPECT_WALLKIT_ERROR(reflection(L(0)), ErrorCode::kZeroNorm);
  EXPECT_WALLKIT_ERROR(reflection(L(1)), ErrorCode::kPreconditionViolated);
}

TEST(Reflection, DeltaPrimeOnH1) {
  using namespace named;
  auto r = reflection(delta_prime());
  EXPECT_EQ(apply(r, delta_prime()), -delta_prime());
  EXPECT_EQ(apply(r, h1()), -h2());
  EXPECT_TRUE(compose(r, r).is_identity());
  EXPECT_EQ(inverse(r), r);
}

TEST(Reflection, FixesOrthogonalComplement) {
  using namespace named;
  auto x = delta_prime();
  auto r = reflection(x);
  IntMatrix row(1, 16);
  auto gx = lambda_lattice()->pairings(x.coords());
  for (std::size_t c = 0; c < 16; ++c) row(0, c) = gx[c];
  for (auto const& k : integer_kernel(row)) {
    LatticeVector y(lambda_lattice(), k);
    EXPECT_EQ(apply(r, y), y);
  }
}

TEST(Reflection, Div2FamiliesAreIntegral) {
  gen::Rng rng(29);
  for (long long q : {-2, -4}) {
    for (int t = 0; t < 200; ++t) {
      auto v = gen::lambda_div2(rng, q, 10);
      ASSERT_EQ(norm(v), q);
      ASSERT_EQ(divisibility(v), 2);
      EXPECT_TRUE(is_reflection_integral(v));
    }
  }
}

TEST(IsometryType, RejectsNonIsometry) {
  EXPECT_WALLKIT_ERROR(Isometry(make_standard("U"), IntMatrix(2, 2, {1, 1, 0, 1})),
                       ErrorCode::kNotIsometry);
  auto r = reflection(named::delta_prime());
  EXPECT_WALLKIT_ERROR(compose(r, reflection(named::delta_hat())), ErrorCode::kLatticeMismatch);
}

TEST(IsometryType, InverseOfTransvectionWord) {
  gen::Rng rng(31);
  auto l = make_standard("LambdaHat2");
  for (int t = 0; t < 20; ++t) {
    auto w = gen::transvection_word(rng, l, 4, 3);
    EXPECT_TRUE(compose(w, inverse(w)).is_identity());
    EXPECT_EQ(abs(determinant(w.matrix())), 1);
  }
}

TEST(DiscAction, IdentityAndQbarPreservation) {
  auto l = make_standard("E8(-2)");
  auto g = discriminant_group(l);
  auto id = induced_disc_action(g, Isometry::identity(l));
  for (std::size_t k = 0; k < id.size(); ++k) EXPECT_EQ(id[k], k);
  auto refl = e8_simple_root_reflections(l, "E8(-2)");
  ASSERT_EQ(refl.size(), 8u);
  for (auto const& r : refl) {
    EXPECT_TRUE(compose(r, r).is_identity());
    auto perm = induced_disc_action(g, r);
    for (std::size_t k = 0; k < perm.size(); ++k) EXPECT_EQ(g.qbar(g.element(perm[k])), g.qbar(g.element(k)));
  }
  auto e1 = disc_residue(g, LatticeVector::basis(l, 0), 2);
  EXPECT_EQ(induced_disc_action(g, refl[0])[g.index_of(e1)], g.index_of(e1));
}

TEST(Orbits, E8MinusTwoMatchesBitOracle) {
  auto l = make_standard("E8(-2)");
  auto g = discriminant_group(l);
  std::vector<std::vector<std::size_t>> gens;
  for (auto const& r : e8_simple_root_reflections(l, "E8(-2)")) gens.push_back(induced_disc_action(g, r));
  std::vector<std::size_t> sizes;
  for (auto const& o : orbits(gens, g.order())) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, oracle::orbit_sizes(oracle::e8_disc()));
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 120, 135}));

  std::reverse(gens.begin(), gens.end());
  std::vector<std::size_t> shuffled;
  for (auto const& o : orbits(gens, g.order())) shuffled.push_back(o.size());
  std::sort(shuffled.begin(), shuffled.end());
  EXPECT_EQ(shuffled, sizes);
}

TEST(Orbits, TrivialGroup) {
  std::vector<std::size_t> id{0, 1, 2, 3};
  EXPECT_EQ(orbits({id}, 4).size(), 4u);
  EXPECT_WALLKIT_ERROR(e8_simple_root_reflections(make_standard("LambdaHat"), "U_1"),
                       ErrorCode::kInvalidArgument);
}

TEST(Eichler, Transvection) {
  auto l = make_standard("LambdaHat2");
  auto e = LatticeVector::basis(l, 0);
  EXPECT_TRUE(eichler_transvection(e, LatticeVector::zero(l)).is_identity());
  LatticeVector a(l, make_vector({0, 0, 1, 2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1}));
  auto t = eichler_transvection(e, a);
  EXPECT_EQ(apply(t, e), e);
  EXPECT_TRUE(acts_trivially(t));
  EXPECT_WALLKIT_ERROR(eichler_transvection(e, LatticeVector::basis(l, 1)),
                       ErrorCode::kPreconditionViolated);
  EXPECT_WALLKIT_ERROR(eichler_transvection(LatticeVector::basis(l, 6), a),
                       ErrorCode::kPreconditionViolated);
  auto odd = lambda_hat_lattice();
  EXPECT_WALLKIT_ERROR(eichler_transvection(LatticeVector::basis(odd, 0), LatticeVector::basis(odd, 2)),
                       ErrorCode::kPreconditionViolated);
}

TEST(Eichler, NormalizesToCaseRepresentative) {
  auto v = hat3({2, -2, 0, 0, 0, 0, -1});
  EXPECT_EQ(norm(v), -10);
  EXPECT_EQ(divisibility(v), 2);
  auto target = hat3({-2, 2, 0, 0, 0, 0, -1});
  auto phi = eichler_normalize(v, target);
  EXPECT_EQ(apply(phi, v), target);
  EXPECT_TRUE(acts_trivially(phi));
}

TEST(Eichler, SelfAndMismatch) {
  auto v = hat3({1, 3, 0, 2, 1, 0, 1});
  EXPECT_EQ(apply(eichler_normalize(v, v), v), v);
  // Equal invariants carried between different U blocks.
  auto a = hat3({2, 0, 0, 0, 0, 0, 1});
  auto b = hat3({0, 0, 2, 0, 0, 0, 1});
  EXPECT_EQ(apply(eichler_normalize(a, b), a), b);
  auto c = hat3({1, 0, 0, 0, 0, 0, 0});
  auto d = hat3({0, 0, 0, 1, 0, 0, 0});
  EXPECT_EQ(apply(eichler_normalize(c, d), c), d);
  auto x = hat3({2, -1, 0, 0, 0, 0, 0});  // q = -4, div 1
  auto y = hat3({0, 0, 0, 0, 0, 0, 1});   // q = -2, div 2
  EXPECT_WALLKIT_ERROR(eichler_normalize(x, y), ErrorCode::kInvariantMismatch);
  auto z = hat3({0, 0, 2, -1, 0, 0, 1});  // q = -6, div 1
  auto w = hat3({0, 0, 3, -1, 0, 0, 0});  // q = -6, div 1
  EXPECT_EQ(apply(eichler_normalize(z, w), z), w);
  EXPECT_WALLKIT_ERROR(eichler_normalize(named::h1(), named::h2()), ErrorCode::kNoUSquare);
}

TEST(Eichler, ResidueMismatchIsReported) {
  auto l = make_standard("LambdaHat2");
  auto basis = [&](std::size_t k) { return LatticeVector::basis(l, k); };
  auto two_l = Integer(-2) * basis(0) + Integer(2) * basis(1);  // 2 L_{-1}
  auto v = two_l + basis(6) + basis(8);                          // + b1 + b3
  auto w = two_l + basis(7) + basis(9);                          // + b2 + b4
  ASSERT_EQ(norm(v), -16);
  ASSERT_EQ(norm(w), -16);
  ASSERT_EQ(divisibility(v), 2);
  ASSERT_EQ(divisibility(w), 2);
  try {
    eichler_normalize(v, w);
    ADD_FAILURE() << "expected InvariantMismatch";
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvariantMismatch);
    EXPECT_NE(std::string(e.what()).find("residue"), std::string::npos);
  }
}
