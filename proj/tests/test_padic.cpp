// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "hgzeta/count.hpp"
#include "hgzeta/errors.hpp"
#include "hgzeta/padic.hpp"
#include "hgzeta/zetafac.hpp"
#include "oracles.hpp"

using namespace hgzeta;
using namespace hgzeta::padic;

namespace {

fam::FamilySpec dwork(int n, std::uint32_t p, unsigned f = 1) {
  return fam::make_family(p, f, oracle::dwork_matrix(n), std::vector<ff::Elem>(static_cast<std::size_t>(n) + 1, 1));
}

std::vector<BigInt> assembled_P(const fam::FamilySpec& spec, ff::Elem lambda, unsigned horizon) {
  cg::Tower tower(spec.p, spec.f);
  auto an = zeta::analyze(spec, lambda, *tower.level(1));
  return zeta::assemble_P(an, tower, horizon, tenth_power(10)).coeffs;
}

}  // namespace

TEST(Ring, InverseAndTeichmuller) {
  for (unsigned f : {1u, 2u}) {
    Ring R(7, f, 5);
    for (ff::Elem a = 1; a < R.residue_field().size(); a += 3) {
      PadicElem x = R.add(R.lift(a), R.scale(R.one(), 14));
      EXPECT_EQ(R.mul(x, R.inv(x)), R.one());
      PadicElem w = R.teichmuller(a);
      EXPECT_EQ(R.reduce(w), a);
      EXPECT_EQ(R.pow(w, BigInt(R.residue_field().size())), w);
    }
    EXPECT_THROW(R.inv(R.from_int(7)), ZeroInput);
    EXPECT_EQ(R.valuation(R.from_int(98)), 2u);
  }
}

TEST(Ring, FrobeniusLift) {
  Ring R(7, 2, 6);
  const auto& F = R.residue_field();
  for (ff::Elem a = 1; a < F.size(); a += 5) {
    PadicElem x = R.lift(a);
    PadicElem y = R.lift((a * 3 + 1) % F.size());
    EXPECT_EQ(R.reduce(R.sigma(x)), F.pow(a, 7));
    EXPECT_EQ(R.sigma(R.mul(x, y)), R.mul(R.sigma(x), R.sigma(y)));
    EXPECT_EQ(R.sigma(x, 2), x);
    PadicElem w = R.teichmuller(a);
    EXPECT_EQ(R.sigma(w), R.pow(w, 7));
  }
  Ring Z(7, 1, 3);
  EXPECT_EQ(Z.sigma(Z.from_int(12)), Z.from_int(12));
}

TEST(Series, CriterionResidueDworkCubic) {
  EXPECT_EQ(criterion_residue(dwork(2, 7), 1), 6u);
  EXPECT_THROW(criterion_residue(dwork(2, 7), 0), ZeroInput);
}

TEST(Series, ConstantTermAtZero) {
  Ring R(13, 1, 4);
  EXPECT_EQ(eval_F_trunc(R, dwork(3, 13), R.zero(), 2), R.one());
}

TEST(Series, TruncationStabilizes) {
  auto spec = dwork(2, 7);
  Ring R(7, 1, 3);
  PadicElem x = R.teichmuller(1);
  PadicElem a = eval_F_trunc(R, spec, x, 1);
  PadicElem b = eval_F_trunc(R, spec, x, 2);
  // F_{1,2}(x) = F_{1,1}(x) F_{1,1}(x^p) mod p and x^p = x
  EXPECT_EQ(R.reduce(b), R.residue_field().mul(R.reduce(a), R.reduce(a)));
  EXPECT_THROW(eval_F_trunc(R, spec, x, 12), BudgetExceeded);
}

TEST(Fgl, TwoFormsAgree) {
  struct Case {
    fam::FamilySpec spec;
    ff::Elem lambda;
  };
  std::vector<Case> cases{{dwork(2, 7), 3},
                          {dwork(3, 13), 2},
                          {fam::make_family(73, 1, oracle::yu_yui_matrix(), {2, 3, 5, 7}), 11}};
  for (const auto& cs : cases) {
    Ring R(cs.spec.p, 1, 6);
    PadicElem L = R.teichmuller(cs.lambda);
    for (std::uint64_t m = 0; m <= 20; ++m) {
      FglPair pair = fgl_log_coefficient(R, cs.spec, L, m);
      EXPECT_EQ(pair.multinomial, pair.hypergeometric) << cs.spec.p << " m=" << m;
    }
  }
}

TEST(Fgl, AgreeUpToPSquared) {
  auto spec = dwork(2, 7);
  Ring R(7, 1, 6);
  for (ff::Elem l : {1u, 2u, 4u}) {
    PadicElem L = R.teichmuller(l);
    for (std::uint64_t m = 0; m < 49; ++m) {
      FglPair pair = fgl_log_coefficient(R, spec, L, m);
      EXPECT_EQ(pair.multinomial, pair.hypergeometric) << l << " m=" << m;
    }
  }
  FglPair one = fgl_log_coefficient(R, spec, R.teichmuller(3), 1);
  EXPECT_EQ(one.multinomial, R.neg(R.teichmuller(3)));
  EXPECT_EQ(fgl_log_coefficient(R, spec, R.one(), 0).multinomial, R.one());
}

TEST(Fgl, HeightOneMatchesCriterion) {
  for (std::uint32_t p : {7u, 13u, 19u}) {
    auto spec = dwork(2, p);
    Ring R(p, 1, 2);
    const auto& F = R.residue_field();
    for (ff::Elem l = 1; l < p; ++l) {
      if (fam::is_degenerate(F, spec, l)) continue;
      PadicElem a1 = fgl_log_coefficient(R, spec, R.teichmuller(l), p - 1).multinomial;
      ff::Elem expect = F.mul(F.pow(l, p - 1), criterion_residue(spec, l));
      EXPECT_EQ(R.reduce(a1), expect) << p << " " << l;
      EXPECT_EQ(height_one_test(R, a1), expect != 0);
    }
  }
}

TEST(UnitRoot, DworkCubicSevenIsRootOfP) {
  auto spec = dwork(2, 7);
  for (ff::Elem l : {1u, 2u, 4u}) {
    auto P = assembled_P(spec, l, 4);
    auto rep = unit_root(spec, l, 4);
    ASSERT_TRUE(rep.value.has_value());
    Ring R(7, 1, 4);
    EXPECT_EQ(eval_at_inverse(R, P, *rep.value), R.zero()) << l;
    EXPECT_EQ(unit_reciprocal_roots(P, 7), 1u);
  }
}

TEST(UnitRoot, QuadraticExtension) {
  auto spec = dwork(2, 7, 2);
  const auto& F = ff::FiniteField(7, 2);
  Ring R(7, 2, 3);
  int checked = 0;
  for (ff::Elem l = 1; l < 49 && checked < 4; l += 5) {
    if (fam::is_degenerate(F, spec, l)) continue;
    std::int64_t N1 = count::brute_count(spec, l, 1).total;
    std::vector<BigInt> P{1, BigInt(N1 - 50), 49};
    auto rep = unit_root(spec, l, 3);
    if (!rep.value) {
      EXPECT_EQ((N1 - 50) % 7, 0);
      continue;
    }
    EXPECT_EQ(eval_at_inverse(R, P, *rep.value), R.zero()) << l;
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(UnitRoot, CubicNeverSupersingular) {
  // full rational 3-torsion forces 9 | N1, while p = 1 mod 3 and N1 = p + 1 are incompatible
  for (std::uint32_t p : {13u, 19u, 31u}) {
    auto spec = dwork(2, p);
    ff::FiniteField F(p, 1);
    for (ff::Elem l = 1; l < p; ++l) {
      if (fam::is_degenerate(F, spec, l)) continue;
      std::int64_t N1 = count::brute_count(spec, l, 1).total;
      EXPECT_NE((N1 - 1 - static_cast<std::int64_t>(p)) % p, 0);
      EXPECT_NE(criterion_residue(spec, l), 0u) << p << " " << l;
    }
  }
}

TEST(UnitRoot, QuarticSupersingularIffTraceDivisible) {
  auto spec = dwork(3, 13);
  cg::Tower tower(13, 1);
  ff::FiniteField F(13, 1);
  int supersingular = 0, ordinary = 0;
  for (ff::Elem l = 1; l < 13; ++l) {
    if (fam::is_degenerate(F, spec, l)) continue;
    std::int64_t N1 = count::delsarte_full_count(spec, l, *tower.level(1), tenth_power(10)).total;
    bool ss = (N1 - 1) % 13 == 0;
    EXPECT_EQ(criterion_residue(spec, l) == 0, ss) << l;
    supersingular += ss;
    ordinary += !ss;
  }
  EXPECT_GT(supersingular, 0);
  EXPECT_GT(ordinary, 0);
}

TEST(UnitRoot, QuarticThirteen) {
  auto spec = dwork(3, 13);
  ff::FiniteField F(13, 1);
  ff::Elem l = 1;
  while (fam::is_degenerate(F, spec, l) || criterion_residue(spec, l) == 0) ++l;
  auto P = assembled_P(spec, l, 3);
  auto rep = unit_root(spec, l, 3);
  ASSERT_TRUE(rep.value.has_value());
  Ring R(13, 1, 3);
  EXPECT_EQ(eval_at_inverse(R, P, *rep.value), R.zero());
  EXPECT_EQ(unit_reciprocal_roots(P, 13), 1u);
  auto Pss = assembled_P(spec, 2, 3);
  EXPECT_EQ(unit_reciprocal_roots(Pss, 13), 0u);
}

TEST(UnitRoot, Budget) { EXPECT_THROW(unit_root(dwork(2, 73), 1, 4), BudgetExceeded); }
