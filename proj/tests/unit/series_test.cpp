#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toricq/error.hpp"
#include "toricq/fan_library.hpp"
#include "toricq/series.hpp"
#include "toricq/variety.hpp"

using namespace toricq;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

TExponent t0(std::size_t vars) { return TExponent(vars, 0); }

TExponent t_unit(std::size_t vars, std::size_t i, std::uint32_t power = 1) {
  TExponent e(vars, 0);
  e[i] = power;
  return e;
}

// Random element of positive divisor degree or positive t-degree.
ZLaurentSeries random_nilpotent(const ToricVariety& v, Truncation trunc, std::mt19937& rng) {
  const auto& ring = *v.ring;
  std::uniform_int_distribution<int> zpow(-2, 2);
  std::uniform_int_distribution<std::size_t> which(0, trunc.t_vars - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  ZLaurentSeries s(v.ring, trunc);
  for (int k = 0; k < 4; ++k) {
    CohClass c = oracle::random_class(ring, rng);
    TExponent t = t0(trunc.t_vars);
    if (coin(rng) == 0 || trunc.t_trunc == 0) {
      c.coeffs[0] = 0;
    } else {
      t[which(rng)] = 1;
    }
    s.add_term(zpow(rng), t, c);
  }
  return s;
}

ZLaurentSeries random_series(const ToricVariety& v, Truncation trunc, std::mt19937& rng) {
  std::uniform_int_distribution<int> zpow(-3, 1);
  std::uniform_int_distribution<std::uint32_t> tpow(0, 1);
  ZLaurentSeries s(v.ring, trunc);
  for (int k = 0; k < 5; ++k) {
    TExponent t(trunc.t_vars, 0);
    for (auto& x : t) x = tpow(rng);
    s.add_term(zpow(rng), t, oracle::random_class(*v.ring, rng));
  }
  return s;
}

}  // namespace

TEST(Series, InverseOfLinearFactorOnP1) {
  const auto v = ToricVariety::make(projective_space_fan(1));
  const Truncation trunc{-4, 0, 2};
  const auto h = v->ring->ray_class(0);
  const auto inv = zl_invert_unit(ZLaurentSeries::linear_factor(v->ring, trunc, h, 1));
  const auto expected = oracle::series(*v, trunc, {{-1, t0(2), v->ring->one()}, {-2, t0(2), Rational(-1) * h}});
  EXPECT_EQ(inv, expected);
}

TEST(Series, InverseOfLinearFactorOnP2) {
  const auto v = ToricVariety::make(projective_space_fan(2));
  const Truncation trunc{-5, 0, 2};
  const auto h = v->ring->ray_class(0);
  const auto h2 = v->ring->mul(h, h);
  const auto inv = zl_invert_unit(ZLaurentSeries::linear_factor(v->ring, trunc, h, 1));
  const auto expected = oracle::series(
      *v, trunc, {{-1, t0(2), v->ring->one()}, {-2, t0(2), Rational(-1) * h}, {-3, t0(2), h2}});
  EXPECT_EQ(inv, expected);

  // (H + 2z)^{-1} = z^{-1}/2 - H z^{-2}/4 + H^2 z^{-3}/8.
  const auto inv2 = zl_invert_unit(ZLaurentSeries::linear_factor(v->ring, trunc, h, 2));
  const auto expected2 =
      oracle::series(*v, trunc,
                     {{-1, t0(2), Rational(1, 2) * v->ring->one()},
                      {-2, t0(2), Rational(-1, 4) * h},
                      {-3, t0(2), Rational(1, 8) * h2}});
  EXPECT_EQ(inv2, expected2);
}

TEST(Series, LinearFactorTimesItsInverseIsOne) {
  const auto v = ToricVariety::make(projective_space_fan(1));
  const Truncation trunc{-4, 0, 2};
  const auto h = v->ring->ray_class(0);
  const auto partial = oracle::series(*v, trunc, {{-1, t0(2), v->ring->one()}, {-2, t0(2), Rational(-1) * h}});
  EXPECT_EQ(zl_mul(ZLaurentSeries::linear_factor(v->ring, trunc, h, 1), partial), ZLaurentSeries::one(v->ring, trunc));
}

TEST(Series, InverseNeedsAUniqueScalarLeadingTerm) {
  const auto v = ToricVariety::make(projective_space_fan(2));
  const Truncation trunc{-5, 1, 2};
  const auto& ring = *v->ring;
  EXPECT_EQ(code_of([&] { zl_invert_unit(ZLaurentSeries(v->ring, trunc)); }), ErrorCode::NotInvertible);
  EXPECT_EQ(code_of([&] { zl_invert_unit(ZLaurentSeries::term(v->ring, trunc, 0, t0(2), ring.ray_class(0))); }),
            ErrorCode::NotInvertible);
  const auto one_plus_z = oracle::series(*v, trunc, {{0, t0(2), ring.one()}, {1, t0(2), ring.one()}});
  EXPECT_EQ(code_of([&] { zl_invert_unit(one_plus_z); }), ErrorCode::NotInvertible);
  const auto t_only = ZLaurentSeries::term(v->ring, trunc, 0, t_unit(2, 1), ring.one());
  EXPECT_EQ(code_of([&] { zl_invert_unit(t_only); }), ErrorCode::NotInvertible);
}

TEST(Series, RandomUnitsTimesInversesAreOne) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> lead(-1, 1);
  std::uniform_int_distribution<int> scalar(1, 6);
  for (const auto& fan : oracle::shipped_fans()) {
    const auto v = ToricVariety::make(fan);
    const Truncation trunc{-16, 2, fan.picard_rank() + 1};
    for (int trial = 0; trial < 6; ++trial) {
      const int k = lead(rng);
      auto a = random_nilpotent(*v, trunc, rng);
      a += ZLaurentSeries::one(v->ring, trunc);
      a = zl_mul(a, ZLaurentSeries::term(v->ring, trunc, k, t0(trunc.t_vars),
                                         Rational(scalar(rng), 3) * v->ring->one()));
      const auto inv = zl_invert_unit(a);
      // Terms of the product at or above floor + max_z(a) see no cut-off inverse terms.
      const int exact_floor = trunc.z_floor + *a.max_z();
      ASSERT_LE(exact_floor, 0);
      EXPECT_EQ(zl_mul(a, inv).with_floor(exact_floor), ZLaurentSeries::one(v->ring, trunc).with_floor(exact_floor))
          << fan.name();
    }
  }
}

TEST(Series, MultiplicationIsCommutativeAssociativeAndDistributive) {
  std::mt19937 rng(5);
  for (const auto& fan : oracle::shipped_fans()) {
    const auto v = ToricVariety::make(fan);
    const Truncation trunc{-6, 2, fan.picard_rank() + 1};
    for (int trial = 0; trial < 4; ++trial) {
      const auto a = random_series(*v, trunc, rng);
      const auto b = random_series(*v, trunc, rng);
      const auto c = random_series(*v, trunc, rng);
      EXPECT_EQ(zl_mul(a, b), zl_mul(b, a));
      EXPECT_EQ(zl_mul(zl_mul(a, b), c), zl_mul(a, zl_mul(b, c)));
      EXPECT_EQ(zl_mul(a, zl_add(b, c)), zl_add(zl_mul(a, b), zl_mul(a, c)));
    }
  }
}

TEST(Series, MixedTruncationsAreRejected) {
  const auto v = ToricVariety::make(projective_space_fan(1));
  const auto a = ZLaurentSeries::one(v->ring, Truncation{-3, 1, 2});
  const auto b = ZLaurentSeries::one(v->ring, Truncation{-4, 1, 2});
  const auto c = ZLaurentSeries::one(v->ring, Truncation{-3, 2, 2});
  EXPECT_EQ(code_of([&] { zl_add(a, b); }), ErrorCode::IncompatibleTruncation);
  EXPECT_EQ(code_of([&] { zl_mul(a, c); }), ErrorCode::IncompatibleTruncation);
  const auto other = ToricVariety::make(projective_space_fan(1));
  const auto d = ZLaurentSeries::one(other->ring, Truncation{-3, 1, 2});
  EXPECT_EQ(code_of([&] { zl_mul(a, d); }), ErrorCode::IncompatibleTruncation);

  const TPoly p = TPoly::variable(2, 1, 0);
  EXPECT_EQ(code_of([&] { p * TPoly::variable(2, 2, 0); }), ErrorCode::IncompatibleTruncation);
}

TEST(Series, TermsOutsideTheTruncationAreDropped) {
  const auto v = ToricVariety::make(projective_space_fan(1));
  const Truncation trunc{-2, 1, 2};
  ZLaurentSeries s(v->ring, trunc);
  s.add_term(-3, t0(2), v->ring->one());
  s.add_term(0, t_unit(2, 0, 2), v->ring->one());
  EXPECT_TRUE(s.is_zero());
  s.add_term(-2, t_unit(2, 1), v->ring->one());
  EXPECT_EQ(s.min_z(), -2);
  EXPECT_EQ(s.max_z(), -2);
  EXPECT_TRUE(s.with_floor(-1).is_zero());

  const TPoly x = TPoly::variable(2, 1, 0);
  EXPECT_TRUE((x * x).is_zero());
  const TPoly y = TPoly::variable(2, 2, 1);
  EXPECT_EQ((y * y).terms().size(), 1u);
}

TEST(Series, ExpOfLinearTermOnP1) {
  const auto v = ToricVariety::make(projective_space_fan(1));
  const Truncation trunc{-4, 2, 2};
  const auto h = v->ring->ray_class(0);
  const auto arg = ZLaurentSeries::term(v->ring, trunc, 0, t_unit(2, 1), h);
  // H^2 = 0, so the series stops after the linear term.
  const auto expected = oracle::series(*v, trunc, {{0, t0(2), v->ring->one()}, {-1, t_unit(2, 1), h}});
  EXPECT_EQ(exp_factor(arg, -1), expected);
}

TEST(Series, ExpOfScalarParameter) {
  const auto v = ToricVariety::make(projective_space_fan(1));
  const Truncation trunc{-4, 2, 2};
  const auto& one = v->ring->one();
  const auto arg = ZLaurentSeries::term(v->ring, trunc, 0, t_unit(2, 1), one);
  const auto expected = oracle::series(
      *v, trunc, {{0, t0(2), one}, {0, t_unit(2, 1), one}, {0, t_unit(2, 1, 2), Rational(1, 2) * one}});
  EXPECT_EQ(exp_factor(arg, 0), expected);
}

TEST(Series, ExpRejectsArgumentsThatDoNotTerminate) {
  const auto v = ToricVariety::make(projective_space_fan(1));
  const Truncation trunc{-4, 2, 2};
  EXPECT_EQ(code_of([&] { exp_factor(ZLaurentSeries::one(v->ring, trunc), 0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { exp_factor(ZLaurentSeries::term(v->ring, trunc, -1, t_unit(2, 0), v->ring->one()), 0); }),
            ErrorCode::InvalidArgument);
}

TEST(Series, ExpTurnsSumsIntoProducts) {
  std::mt19937 rng(3);
  for (const auto& fan : oracle::shipped_fans()) {
    const auto v = ToricVariety::make(fan);
    const Truncation trunc{-8, 3, fan.picard_rank() + 1};
    for (int trial = 0; trial < 3; ++trial) {
      ZLaurentSeries a(v->ring, trunc);
      ZLaurentSeries b(v->ring, trunc);
      for (std::size_t i = 0; i < trunc.t_vars; ++i) {
        a.add_term(0, t_unit(trunc.t_vars, i), oracle::random_class(*v->ring, rng));
        b.add_term(0, t_unit(trunc.t_vars, i), oracle::random_class(*v->ring, rng));
      }
      for (int zp : {0, -1}) {
        EXPECT_EQ(zl_mul(exp_factor(a, zp), exp_factor(b, zp)), exp_factor(zl_add(a, b), zp)) << fan.name();
      }
    }
  }
}

TEST(Series, CoefficientExtraction) {
  const auto v = ToricVariety::make(projective_space_fan(2));
  const Truncation trunc{-5, 1, 2};
  const auto h = v->ring->ray_class(0);
  const auto s = oracle::series(*v, trunc, {{-1, t0(2), h}, {-1, t_unit(2, 0), v->ring->one()}, {0, t0(2), h}});
  const auto c = s.z_coefficient(-1);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.at(t0(2)), h);
  EXPECT_TRUE(s.z_coefficient(-2).empty());
  EXPECT_EQ(s.terms().begin()->first.z, 0);
}
