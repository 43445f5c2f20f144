#include <gtest/gtest.h>

#include <set>

#include "expect_error.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "wallkit/classifier.hpp"
#include "wallkit/isometry.hpp"
#include "wallkit/nikulin.hpp"
#include "wallkit/walls.hpp"

using namespace wallkit;
using namespace wallkit::named;

namespace {

std::set<oracle::Vec> report_rays(WallReport const& report) {
  std::set<oracle::Vec> out;
  for (auto const& w : report.walls) {
    auto v = oracle::to_vec(w.ray.coords());
    for (auto x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
    out.insert(v);
  }
  return out;
}

std::set<oracle::Vec> brute_rays(std::vector<LatticeVector> const& basis, int bound) {
  std::vector<oracle::Vec> b;
  for (auto const& v : basis) b.push_back(oracle::to_vec(v.coords()));
  return oracle::brute_force_wall_rays(b, oracle::to_matrix(lambda_lattice()->gram()), bound);
}

}  // namespace

TEST(IsWall, Examples) {
  EXPECT_TRUE(is_wall(delta_prime()));
  EXPECT_TRUE(is_wall(sigma_prime()));
  EXPECT_TRUE(is_wall(Integer(5) * delta_prime()));
  EXPECT_FALSE(is_wall(h1()));
  EXPECT_TRUE(is_wall(e1_lambda()));
  EXPECT_FALSE(is_wall(e1_lambda() - h1()));
  EXPECT_TRUE(is_wall(L2(-1)));
  EXPECT_TRUE(is_wall(L2(-1) - h1()));
  EXPECT_TRUE(is_wall(Integer(2) * e1_lambda() - delta_prime()));
  EXPECT_FALSE(is_wall(L2(1)));
  EXPECT_WALLKIT_ERROR(is_wall(LatticeVector::zero(lambda_lattice())), ErrorCode::kZeroVector);
  EXPECT_WALLKIT_ERROR(is_wall(delta_hat()), ErrorCode::kLatticeMismatch);
}

TEST(IsWall, MatchesOracleRule) {
  gen::Rng rng(211);
  auto g = oracle::to_matrix(lambda_lattice()->gram());
  for (int t = 0; t < 2000; ++t) {
    auto v = gen::lambda_primitive(rng, 2);
    EXPECT_EQ(is_wall(v), oracle::nikulin_wall_rule(oracle::to_vec(v.coords()), g));
  }
  for (int t = 0; t < 300; ++t) {
    auto v = gen::lambda_div2(rng, t % 2 ? -2 : -4, 3);
    EXPECT_EQ(is_wall(v), oracle::nikulin_wall_rule(oracle::to_vec(v.coords()), g));
  }
}

TEST(IsWall, K3Rules) {
  auto k3 = make_standard("LambdaK3");
  auto k3n2 = make_standard("LambdaK3[2]");
  LatticeVector r(k3, IntVector{1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_TRUE(is_wall(r, WallRule::kK3));
  EXPECT_FALSE(is_wall(LatticeVector::basis(k3, 0), WallRule::kK3));
  auto delta = LatticeVector::basis(k3n2, 22);
  EXPECT_TRUE(is_wall(delta, WallRule::kK3n2));
  IntVector c(23, 0);
  c[0] = 2;
  c[1] = -2;
  c[22] = 1;  // norm -8 - 2 = -10, pairings even
  LatticeVector ten(k3n2, c);
  ASSERT_EQ(norm(ten), -10);
  EXPECT_TRUE(is_wall(ten, WallRule::kK3n2));
  c[1] = -1;
  c[0] = 5;
  c[22] = 0;  // norm -10, div 1
  EXPECT_FALSE(is_wall(LatticeVector(k3n2, c), WallRule::kK3n2));
}

TEST(WallsInPicard, FixturesMatchBruteForce) {
  std::vector<std::vector<LatticeVector>> fixtures = {
      {h1(), h2()},
      {L2(-1), h1(), h2()},
      {e1_lambda(), h1(), h2()},
  };
  std::vector<std::size_t> counts = {2, 7, 7};
  for (std::size_t k = 0; k < fixtures.size(); ++k) {
    PicardEmbedding pic(lambda_lattice(), fixtures[k]);
    auto report = walls_in_picard(pic);
    EXPECT_TRUE(report.complete);
    EXPECT_EQ(report.walls.size(), counts[k]);
    EXPECT_EQ(report_rays(report), brute_rays(fixtures[k], 4));
    for (auto const& w : report.walls) {
      EXPECT_EQ(w.q, norm(w.ray));
      EXPECT_EQ(w.div, divisibility(w.ray));
      ASSERT_TRUE(w.case_id.has_value());
      EXPECT_EQ(*w.case_id, classify_lambda(w.ray).case_id);
    }
  }
}

TEST(WallsInPicard, ReferenceOrientsRays) {
  PicardEmbedding pic(lambda_lattice(), {h1(), h2()});
  LatticeVector ref = Integer(-3) * h1() + h2();
  auto report = walls_in_picard(pic, ref);
  for (auto const& w : report.walls) EXPECT_GT(pairing(w.ray, ref), 0);
}

TEST(WallsInPicard, Preconditions) {
  PicardEmbedding unsat(lambda_lattice(), {Integer(2) * h1(), h2()});
  EXPECT_FALSE(unsat.is_saturated());
  EXPECT_WALLKIT_ERROR(walls_in_picard(unsat), ErrorCode::kNotSaturated);
  PicardEmbedding indefinite(lambda_lattice(), {L2(1), h1()});
  EXPECT_WALLKIT_ERROR(walls_in_picard(indefinite), ErrorCode::kNotNegativeDefinite);
  EXPECT_WALLKIT_ERROR(PicardEmbedding(lambda_lattice(), {h1(), h1()}), ErrorCode::kInvalidArgument);
}

TEST(K3FamilyWalls, Fixtures) {
  auto k3 = make_standard("LambdaK3");
  auto k3n2 = make_standard("LambdaK3[2]");
  IntVector r(22, 0);
  r[0] = 1;
  r[1] = -1;
  auto a = k3_family_walls(WallRule::kK3, PicardEmbedding(k3, {LatticeVector(k3, r)}));
  EXPECT_EQ(a.walls.size(), 1u);
  EXPECT_TRUE(a.complete);

  auto b = k3_family_walls(WallRule::kK3n2, PicardEmbedding(k3n2, {LatticeVector::basis(k3n2, 22)}));
  EXPECT_EQ(b.walls.size(), 1u);

  std::vector<LatticeVector> diag;
  for (std::size_t i = 0; i < 8; ++i) {
    IntVector c(23, 0);
    c[6 + i] = 1;
    c[14 + i] = 1;
    diag.emplace_back(k3n2, c);
  }
  PicardEmbedding e8m2(k3n2, diag);
  EXPECT_EQ(e8m2.induced_gram(), e8_minus2_gram());
  auto c = k3_family_walls(WallRule::kK3n2, e8m2);
  EXPECT_TRUE(c.walls.empty());
  EXPECT_TRUE(c.complete);

  EXPECT_WALLKIT_ERROR(k3_family_walls(WallRule::kK3, PicardEmbedding(lambda_lattice(), {h1()})),
                       ErrorCode::kLatticeMismatch);
}

TEST(KahlerSide, Examples) {
  auto walls = walls_in_picard(PicardEmbedding(lambda_lattice(), {h1(), h2()}));
  LatticeVector omega = Integer(3) * L2(1) - h1();
  EXPECT_TRUE(kahler_side_test(omega, omega, walls));
  EXPECT_FALSE(kahler_side_test(Integer(3) * L2(1) + h1(), omega, walls));
  EXPECT_FALSE(kahler_side_test(Integer(3) * L2(1) - h1() - h2(), omega, walls));
  EXPECT_FALSE(kahler_side_test(Integer(-3) * L2(1) - h1(), omega, walls));
  EXPECT_WALLKIT_ERROR(kahler_side_test(omega, L2(1), walls), ErrorCode::kOmegaOnWall);
  EXPECT_WALLKIT_ERROR(kahler_side_test(omega, h1(), walls), ErrorCode::kNotPositive);
}

TEST(Scan, OrthocomplementOfSigmaPrime) {
  auto scan = orthocomplement_square_scan(sigma_prime(), 2, 1000, Integer(-2));
  EXPECT_EQ(scan.requested, 1000u);
  EXPECT_EQ(scan.accepted, 1000u);
  EXPECT_EQ(scan.target_hits, 0u);
  ASSERT_EQ(scan.q_mod4.size(), 1u);
  EXPECT_EQ(scan.q_mod4.begin()->first, 0);
  auto again = orthocomplement_square_scan(sigma_prime(), 2, 1000, Integer(-2));
  EXPECT_EQ(again.attempts, scan.attempts);
  EXPECT_EQ(again.q_mod4, scan.q_mod4);
}

TEST(Scan, BasisSatisfiesConstraints) {
  for (auto const& v : {sigma_prime(), delta_prime(), h2()}) {
    auto basis = orthocomplement_basis(v, 2);
    EXPECT_EQ(basis.size(), 15u);
    for (auto const& b : basis) {
      LatticeVector x(lambda_lattice(), b);
      EXPECT_EQ(pairing(x, v), 0);
      for (auto const& p : lambda_lattice()->pairings(b)) EXPECT_EQ(p % 2, 0);
    }
  }
}

TEST(Scan, H2PerpHasMinusTwoClasses) {
  // h1 lies in h2-perp with div 2 and norm -2, so the scan is not vacuous.
  auto scan = orthocomplement_square_scan(h2(), 2, 500, Integer(-2));
  EXPECT_EQ(scan.accepted, 500u);
  EXPECT_GT(scan.q_mod4.count(2), 0u);
}

TEST(WallProperties, InvariantUnderKnownIsometries) {
  gen::Rng rng(223);
  auto rd = reflection(delta_prime());
  auto rs = reflection(sigma_prime());
  for (int t = 0; t < 1000; ++t) {
    auto v = gen::lambda_primitive(rng, 3);
    bool w = is_wall(v);
    EXPECT_EQ(is_wall(apply(rd, v)), w);
    EXPECT_EQ(is_wall(apply(rs, v)), w);
    EXPECT_EQ(is_wall(classify_lambda(v).representative), w);
  }
}

TEST(WallProperties, ReflectionPermutesPicardWalls) {
  PicardEmbedding pic(lambda_lattice(), {e1_lambda(), h1(), h2()});
  auto report = walls_in_picard(pic);
  auto rays = report_rays(report);
  for (auto const& w : report.walls) {
    if (!is_reflection_integral(w.ray)) continue;
    auto r = reflection(w.ray);
    WallReport image;
    for (auto const& u : report.walls) image.walls.push_back({apply(r, u.ray), u.q, u.div, {}});
    EXPECT_EQ(report_rays(image), rays);
  }
}
