// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "hgzeta/chargauss.hpp"
#include "hgzeta/errors.hpp"

using namespace hgzeta;
using namespace hgzeta::cg;

namespace {

const Real& tol() {
  static const Real t = tenth_power(30);
  return t;
}

}  // namespace

TEST(Characters, TrivialAndZero) {
  Tower tower(7, 1);
  auto L = tower.level(1);
  for (ff::Elem x = 1; x < 7; ++x) EXPECT_LT(distance(L->chi(0, x), Complex(1)), tol());
  for (std::int64_t k = 0; k < 6; ++k) EXPECT_EQ(L->chi(k, 0).norm(), 0);
}

TEST(Characters, QuadraticMatchesEulerCriterion) {
  Tower tower(7, 1);
  auto L = tower.level(1);
  std::int64_t phi2 = L->phi(2);
  for (ff::Elem x = 1; x < 7; ++x) {
    std::int64_t euler = (x * x * x) % 7 == 1 ? 1 : -1;
    EXPECT_LT(distance(L->chi(phi2, x), Complex(euler)), tol()) << x;
  }
}

TEST(Characters, MinusOne) {
  for (std::uint32_t p : {5u, 7u, 13u}) {
    Tower tower(p, 1);
    auto L = tower.level(1);
    for (std::int64_t k = 0; k < L->order(); ++k)
      EXPECT_LT(distance(L->chi(k, p - 1), Complex(L->chi_minus_one(k))), tol());
  }
}

TEST(Characters, LevelMismatchRejected) {
  Tower tower(5, 1);
  auto L = tower.level(1);
  EXPECT_THROW(L->eval(CharacterIndex{1, 2}, ff::FqElem{1, 1}), LevelMismatch);
  EXPECT_THROW(L->eval(CharacterIndex{1, 1}, ff::FqElem{1, 2}), LevelMismatch);
  EXPECT_NO_THROW(L->eval(CharacterIndex{1, 1}, ff::FqElem{1, 1}));
}

TEST(Characters, NormCompatibleAcrossLevels) {
  Tower tower(5, 1);
  auto base = tower.level(1);
  for (unsigned r : {2u, 3u}) {
    auto top = tower.level(r);
    for (std::int64_t k = 0; k < 4; ++k)
      for (ff::Elem c = 1; c < 5; ++c)
        EXPECT_LT(distance(top->chi(top->lifted(k), top->embed(c)), pow_int(base->chi(k, c), r)), tol());
  }
}

TEST(GaussSums, TransformMatchesDirectSum) {
  for (auto [p, f, r] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{
           {5, 1, 1}, {7, 1, 1}, {13, 1, 1}, {2, 3, 1}, {5, 2, 1}, {7, 1, 2}, {3, 1, 4}}) {
    Tower tower(p, f);
    auto L = tower.level(r);
    for (std::int64_t k = 0; k < L->order(); ++k)
      EXPECT_LT(distance(L->gauss(k), gauss_sum_direct(*L, k)), tol()) << p << "^" << f << " r=" << r << " k=" << k;
  }
}

TEST(GaussSums, TrivialCharacterGivesMinusOne) {
  for (std::uint32_t p : {5u, 7u, 13u}) {
    Tower tower(p, 1);
    for (unsigned r = 1; r <= 2; ++r) EXPECT_LT(distance(tower.level(r)->gauss(0), Complex(-1)), tol());
  }
}

TEST(GaussSums, NormAndConjugatePairing) {
  for (std::uint32_t p : {5u, 7u, 13u, 73u}) {
    Tower tower(p, 1);
    auto L = tower.level(1);
    const Real q = p;
    for (std::int64_t k = 1; k < L->order(); ++k) {
      EXPECT_LT(boost::multiprecision::abs(L->gauss(k).norm() - q), tol());
      EXPECT_LT(distance(L->gauss(k) * L->gauss(-k), Complex(q * L->chi_minus_one(k))), tol());
    }
  }
}

TEST(GaussSums, QuadraticAtFiveIsRootFive) {
  Tower tower(5, 1);
  auto L = tower.level(1);
  EXPECT_LT(distance(L->gauss(L->phi(2)), Complex(boost::multiprecision::sqrt(Real(5)))), tol());
}

TEST(DavenportHasse, LiftAllCharacters) {
  for (std::uint32_t p : {5u, 7u, 13u}) {
    Tower tower(p, 1);
    for (unsigned r = 1; r <= 3; ++r)
      for (std::int64_t k = 0; k < static_cast<std::int64_t>(p) - 1; ++k)
        EXPECT_LT(dh_lift_check(tower, k, r).residual(), tol()) << p << " r=" << r << " k=" << k;
  }
}

TEST(DavenportHasse, QuadraticAtSevenSquared) {
  Tower tower(7, 1);
  IdentityPair pair = dh_lift_check(tower, 3, 2);
  EXPECT_LT(distance(pair.lhs, Complex(-7)), tol());
  EXPECT_LT(distance(pair.rhs, Complex(-7)), tol());
}

TEST(DavenportHasse, MultiplicationFormula) {
  Tower t7(7, 1), t13(13, 1);
  EXPECT_LT(dh_multiplication(*t7.level(1), 1, 3).residual(), tol());
  EXPECT_LT(dh_multiplication(*t13.level(1), 2, 4).residual(), tol());
  IdentityPair trivial = dh_multiplication(*t7.level(1), 0, 3);
  EXPECT_LT(distance(trivial.lhs, Complex(-1)), tol());
  EXPECT_LT(trivial.residual(), tol());
}

TEST(DavenportHasse, MultiplicationAllDivisors) {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, unsigned>>{{7, 1}, {13, 1}, {5, 2}, {7, 2}}) {
    Tower tower(p, 1);
    auto L = tower.level(r);
    for (std::int64_t beta = 1; beta <= L->order(); ++beta) {
      if (L->order() % beta || beta % p == 0) continue;
      for (std::int64_t k = 0; k < L->order(); k += (L->order() > 50 ? 7 : 1))
        EXPECT_LT(dh_multiplication(*L, k, beta).residual(), tol()) << p << " r=" << r << " beta=" << beta << " k=" << k;
    }
  }
}
