#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "generators.hpp"
#include "wallkit/discriminant.hpp"
#include "wallkit/isometry.hpp"
#include "wallkit/nikulin.hpp"

using namespace wallkit;
using namespace wallkit::named;

TEST(NamedClasses, Invariants) {
  EXPECT_EQ(norm(e1()), -4);
  EXPECT_EQ(norm(e2()), -8);
  EXPECT_EQ(norm(e1_lambda()), -2);
  EXPECT_EQ(norm(e2_lambda()), -4);
  EXPECT_EQ(norm(delta_prime()), -4);
  EXPECT_EQ(norm(sigma_prime()), -4);
  EXPECT_EQ(divisibility(delta_prime()), 2);
  EXPECT_EQ(divisibility(sigma_prime()), 2);
  EXPECT_EQ(norm(delta_hat()), -2);
  EXPECT_EQ(pairing(delta_hat(), sigma_hat()), 0);
  for (int i = -3; i <= 3; ++i) {
    EXPECT_EQ(norm(L(i)), 2 * i);
    EXPECT_EQ(norm(L2(i)), 4 * i);
    EXPECT_EQ(divisibility(L2(i)), 2);
  }
  EXPECT_EQ(kFujikiConstant, 6);

  auto l = make_standard("E8(-2)");
  auto g = discriminant_group(l);
  auto part = [&](LatticeVector const& v) {
    return LatticeVector(l, block_coords(v, "E8(-2)"));
  };
  EXPECT_EQ(g.qbar(disc_residue(g, part(e1()), 2)), 1);
  EXPECT_EQ(g.qbar(disc_residue(g, part(e2()), 2)), 0);
  EXPECT_FALSE(disc_residue(g, part(e2()), 2).is_zero());
}

TEST(NamedClasses, Lookup) {
  EXPECT_EQ(*by_name("delta_prime"), delta_prime());
  EXPECT_EQ(*by_name("L2_-1"), L2(-1));
  EXPECT_EQ(*by_name("L_3"), L(3));
  EXPECT_FALSE(by_name("L_x").has_value());
  EXPECT_FALSE(by_name("omega").has_value());
}

TEST(Twist, NamedCorrespondences) {
  EXPECT_EQ(twist_ray_to_hat(delta_prime()), delta_hat());
  EXPECT_EQ(twist_ray_to_hat(sigma_prime()), sigma_hat());
  EXPECT_EQ(twist_ray_to_hat(L2(1)), L(1));
  EXPECT_EQ(twist_ray_to_hat(e1_lambda()), e1());
  EXPECT_EQ(twist_ray_to_hat(e2_lambda()), e2());
  EXPECT_EQ(twist_ray_to_lambda(delta_hat()), delta_prime());
  for (int i = -2; i <= 2; ++i) {
    EXPECT_EQ(twist_ray_to_lambda(Integer(2) * L(i + 1) + e2() - delta_hat()),
              Integer(2) * L2(i + 1) + Integer(2) * e2_lambda() - delta_prime());
    EXPECT_EQ(twist_ray_to_lambda(Integer(2) * L(i) - delta_hat() - sigma_hat()), L2(i) - h1());
  }
  EXPECT_WALLKIT_ERROR(twist_ray_to_hat(LatticeVector::zero(lambda_lattice())), ErrorCode::kZeroVector);
  EXPECT_WALLKIT_ERROR(twist_ray_to_hat(delta_hat()), ErrorCode::kLatticeMismatch);
}

TEST(Twist, RoundTripAndPredicate) {
  gen::Rng rng(41);
  for (int t = 0; t < 2000; ++t) {
    auto v = gen::lambda_primitive(rng, 20);
    auto hat = twist_ray_to_hat(v);
    EXPECT_TRUE(is_primitive(hat));
    EXPECT_EQ(twist_ray_to_lambda(hat), v);
    auto gen1 = hat1_ray_generator(hat);
    EXPECT_TRUE(in_hat1(gen1));
    EXPECT_TRUE(is_hat1_primitive(gen1));
    EXPECT_EQ(twist_ray_to_lambda(gen1), v);
    EXPECT_EQ(hat_div1_predicate(v), hat1_divisibility(gen1) == 1);
  }
}

TEST(Twist, Hat1Coordinates) {
  EXPECT_TRUE(in_hat1(delta_hat()));
  EXPECT_FALSE(in_hat1(hhat1()));
  EXPECT_EQ(hat1_ray_generator(hhat1()), delta_hat() + sigma_hat());
  EXPECT_EQ(hat1_divisibility(delta_hat()), 2);
  EXPECT_EQ(hat1_divisibility(L(1)), 1);
  EXPECT_EQ(hat1_to_hat(hat_to_hat1(e2() - delta_hat())), e2() - delta_hat());
  EXPECT_WALLKIT_ERROR(hat_to_hat1(hhat1()), ErrorCode::kPreconditionViolated);
}

TEST(Predicate, Examples) {
  EXPECT_TRUE(hat_div1_predicate(L2(1)));
  EXPECT_FALSE(hat_div1_predicate(e1_lambda()));
  EXPECT_FALSE(hat_div1_predicate(delta_prime()));
  EXPECT_WALLKIT_ERROR(hat_div1_predicate(Integer(2) * L2(1)), ErrorCode::kImprimitive);
}

TEST(Predicate, NormAndDivisibilityTransport) {
  auto own = hat1_ray_generator(twist_ray_to_hat(delta_prime()));
  EXPECT_EQ(norm(own), -2);
  EXPECT_EQ(hat1_divisibility(own), 2);
}

TEST(SymplecticInvolution, Criterion) {
  auto e8m2 = make_standard("E8(-2)");
  auto m2 = make_standard("(-2)");
  EXPECT_TRUE(symplectic_involution_criterion(*e8m2, true));
  EXPECT_TRUE(symplectic_involution_criterion(*direct_sum({e8m2, m2}), true));
  EXPECT_FALSE(symplectic_involution_criterion(*make_standard("U"), true));
  EXPECT_FALSE(symplectic_involution_criterion(*e8m2, false));
  EXPECT_FALSE(symplectic_involution_criterion(*make_standard("E8(-1)"), true));
  EXPECT_FALSE(symplectic_involution_criterion(*rescale(make_standard("E8(-1)"), -2), true));
}

TEST(Transport, ReflectionsIntertwineRayMaps) {
  gen::Rng rng(43);
  for (auto const& x : {delta_prime(), sigma_prime(), h2()}) {
    auto r = reflection(x);
    auto rhat = transport_to_hat(r);
    EXPECT_EQ(transport_to_lambda(rhat), r);
    for (int t = 0; t < 200; ++t) {
      auto v = gen::lambda_primitive(rng, 8);
      EXPECT_EQ(twist_ray_to_hat(apply(r, v)), apply(rhat, twist_ray_to_hat(v)));
    }
  }
}
