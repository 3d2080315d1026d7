#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toricq/error.hpp"
#include "toricq/fan.hpp"
#include "toricq/fan_library.hpp"
#include "toricq/io.hpp"

using namespace toricq;

namespace {

ErrorCode build_error(std::size_t dim, std::vector<LatticeVector> rays, std::vector<std::vector<std::size_t>> cones) {
  try {
    build_fan(dim, std::move(rays), std::move(cones));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "fan was accepted";
  return ErrorCode::InvalidArgument;
}

const Wall& wall_with_face(const Fan& fan, std::vector<std::size_t> face) {
  for (const auto& w : fan.walls()) {
    if (w.face.rays() == face) return w;
  }
  throw std::runtime_error("no such wall");
}

}  // namespace

TEST(Fan, ShippedF2MatchesHirzebruchData) {
  const Fan f2 = load_fan(oracle::fan_path("f2"));
  EXPECT_EQ(f2.dim(), 2u);
  EXPECT_EQ(f2.ray_count(), 4u);
  EXPECT_EQ(f2.picard_rank(), 2u);
  EXPECT_EQ(f2.ray(1), (LatticeVector{-1, -2}));
  EXPECT_EQ(f2.max_cone(0), Cone({1, 2}));
}

TEST(Fan, P1HasOneWallThroughTheOrigin) {
  const Fan p1 = projective_space_fan(1);
  ASSERT_EQ(p1.walls().size(), 1u);
  EXPECT_EQ(p1.walls()[0].face.size(), 0u);
  EXPECT_EQ(p1.walls()[0].relation, (std::vector<std::int64_t>{1, 1}));
}

TEST(Fan, P2WallsAllCarryTheRelationOneOneOne) {
  const Fan p2 = projective_space_fan(2);
  ASSERT_EQ(p2.walls().size(), 3u);
  for (const auto& w : p2.walls()) EXPECT_EQ(w.relation, (std::vector<std::int64_t>{1, 1, 1}));
}

TEST(Fan, F2WallAlongRayFourHasCoefficientMinusTwo) {
  const Fan f2 = hirzebruch_fan(2);
  ASSERT_EQ(f2.walls().size(), 4u);
  EXPECT_EQ(wall_with_face(f2, {3}).relation, (std::vector<std::int64_t>{1, 1, 0, -2}));
  EXPECT_EQ(wall_with_face(f2, {2}).relation, (std::vector<std::int64_t>{1, 1, 2, 0}));
  EXPECT_EQ(wall_with_face(f2, {0}).relation, (std::vector<std::int64_t>{0, 0, 1, 1}));
}

TEST(Fan, WallRelationsVanishOnTheRays) {
  for (const auto& fan : oracle::shipped_fans()) {
    for (const auto& w : fan.walls()) {
      LatticeVector sum(fan.dim(), 0);
      for (std::size_t rho = 0; rho < fan.ray_count(); ++rho) {
        for (std::size_t i = 0; i < fan.dim(); ++i) sum[i] += w.relation[rho] * fan.ray(rho)[i];
      }
      EXPECT_EQ(sum, LatticeVector(fan.dim(), 0)) << fan.name();
      EXPECT_EQ(w.relation[w.off_face_rays[0]], 1);
      EXPECT_EQ(w.relation[w.off_face_rays[1]], 1);
    }
  }
}

TEST(Fan, RejectsTheQuadrantAsIncomplete) {
  EXPECT_EQ(build_error(2, {{1, 0}, {0, 1}}, {{0, 1}}), ErrorCode::NotComplete);
}

TEST(Fan, RejectsNonPrimitiveRay) {
  EXPECT_EQ(build_error(1, {{2}, {-1}}, {{0}, {1}}), ErrorCode::NonPrimitiveRay);
}

TEST(Fan, RejectsSingularCone) {
  // The cone spanned by (1,0) and (1,2) has index 2.
  EXPECT_EQ(build_error(2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}), ErrorCode::NonUnimodularCone);
}

TEST(Fan, RejectsRayOfWrongLength) {
  EXPECT_EQ(build_error(2, {{1, 0}, {0, 1, 0}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}), ErrorCode::DimensionMismatch);
}

TEST(Fan, RejectsOutOfRangeConeIndex) {
  EXPECT_EQ(build_error(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 3}, {0, 2}}), ErrorCode::DimensionMismatch);
}

TEST(Fan, RejectsOverlappingCones) {
  // {(1,0),(1,1)} sits inside {(1,0),(0,1)}: the ray (1,0) bounds three cones.
  EXPECT_EQ(build_error(2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}}, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}),
            ErrorCode::NotAFan);
}

TEST(Fan, RejectsDuplicateRays) {
  EXPECT_EQ(build_error(1, {{1}, {-1}, {1}}, {{0}, {1}, {2}}), ErrorCode::NotAFan);
}

TEST(Fan, PrimitiveCollectionsMatchSubsetEnumeration) {
  auto fans = oracle::shipped_fans();
  fans.push_back(product_fan(projective_space_fan(2), projective_space_fan(1)));
  fans.push_back(hirzebruch_fan(3));
  for (const auto& fan : fans) {
    std::set<std::vector<std::size_t>> got;
    for (const auto& c : primitive_collections(fan)) got.insert(c.rays());
    EXPECT_EQ(got, oracle::primitive_collections(fan)) << fan.name();
  }
}

TEST(Fan, PrimitiveCollectionsOfKnownFans) {
  EXPECT_EQ(primitive_collections(projective_space_fan(2)), (std::vector<Cone>{Cone({0, 1, 2})}));
  EXPECT_EQ(primitive_collections(load_fan(oracle::fan_path("p1xp1"))),
            (std::vector<Cone>{Cone({0, 1}), Cone({2, 3})}));
  EXPECT_EQ(primitive_collections(hirzebruch_fan(2)), (std::vector<Cone>{Cone({0, 1}), Cone({2, 3})}));
}

TEST(Fan, RandomPointsLieInSomeCone) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-50, 50);
  for (const auto& fan : oracle::shipped_fans()) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Rational> p(fan.dim());
      for (auto& x : p) x = coord(rng);
      const auto cones = fan.cones_containing(p);
      ASSERT_FALSE(cones.empty()) << fan.name();
      // The point has nonnegative coordinates in each cone that claims it.
      for (auto c : cones) {
        for (const auto& x : fan.cone_coordinates(c, p)) EXPECT_GE(x, 0);
      }
    }
  }
}

TEST(Fan, ProductFanOrdersFirstFactorSlowest) {
  const Fan p = product_fan(projective_space_fan(1), projective_space_fan(1));
  ASSERT_EQ(p.max_cones().size(), 4u);
  EXPECT_EQ(p.max_cone(0), Cone({0, 2}));
  EXPECT_EQ(p.max_cone(1), Cone({0, 3}));
  EXPECT_EQ(p.max_cone(2), Cone({1, 2}));
}
