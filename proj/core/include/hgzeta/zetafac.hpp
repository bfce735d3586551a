// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hgzeta/chargauss.hpp"
#include "hgzeta/family.hpp"
#include "hgzeta/hgff.hpp"
#include "hgzeta/intlin.hpp"
#include "hgzeta/series.hpp"

namespace hgzeta::zeta {

// rho^k(arg) with arg an F_q code
struct CharFactor {
  std::int64_t k = 0;
  ff::Elem arg = 0;
};

// G(rho^num) / G(rho^den)
struct GaussRatio {
  std::int64_t num = 0;
  std::int64_t den = 0;
};

// Level-1 description of gamma(j); every index lifts along the tower.
struct GammaRecipe {
  int sign = 1;  // (-1)^n, so that gamma(0) = 1
  std::vector<CharFactor> chars;
  std::vector<std::int64_t> gauss;
  std::vector<GaussRatio> ratios;
};

struct SpectralPiece {
  std::size_t j = 0;
  std::vector<std::int64_t> s;
  std::vector<std::int64_t> t_ij;
  std::int64_t t = 0;
  bool delta = false;
  GammaRecipe gamma;
  int gamma_weight = 0;
  hg::ParamList full;      // t_j[phi_alpha] over t_ij[phi_alpha_i], level 1
  hg::Reduction reduction;  // reduced parameters and the common multiset
  ff::Elem x = 0;           // C lambda^{-alpha}

  std::size_t arity() const { return reduction.reduced.arity(); }
  // exponent of the q^{e-1} prefactor
  std::size_t trivial_pairs() const { return reduction.trivial_pairs; }
};

// One summand w * beta^r of u_r.
struct GeometricTerm {
  std::int64_t weight = 0;
  Complex base;
  std::vector<std::size_t> J;
  std::size_t i = 0;
};

// Everything that depends on (family, lambda) but not on r.
struct Analysis {
  fam::FamilySpec spec;
  ff::Elem lambda = 0;
  ff::Elem x = 0;
  intlin::KernelReps reps;
  std::vector<SpectralPiece> pieces;
  std::vector<GeometricTerm> u_terms;
  intlin::DCount D;
};

// Throws AssumptionViolation when Asm1/Asm2 fail, ConfigError when lambda = 0
// or lambda^alpha = C.
std::vector<SpectralPiece> build_pieces(const fam::FamilySpec& spec, ff::Elem lambda);

// gamma at level r from level-1 values: characters to the r-th power,
// G -> -(-G)^r, ratios to the r-th power, sign unchanged.
Complex eval_gamma(const GammaRecipe& gamma, const cg::Level& base, unsigned r);
// gamma evaluated with lifted indices directly at level r
Complex eval_gamma_direct(const GammaRecipe& gamma, const cg::Level& level);

// gamma(j)_r F(j)_r with F(j)_r = Q^{e-1} tghf(reduced; x)
Complex eval_piece(const SpectralPiece& piece, const cg::Level& base, const cg::Level& level);
// gamma(j)_r tghf(full parameters; x)
Complex eval_piece_full(const SpectralPiece& piece, const cg::Level& base, const cg::Level& level);

// Geometric decomposition of u_r, exact in r under Asm2.
std::vector<GeometricTerm> u_terms(const fam::FamilySpec& spec, const cg::Level& base);
Complex u_value(const std::vector<GeometricTerm>& terms, unsigned r);
// u_r by direct kernel enumeration at level r
Complex compute_u(const fam::FamilySpec& spec, const cg::Level& level);

Analysis analyze(const fam::FamilySpec& spec, ff::Elem lambda, const cg::Level& base);

struct Prediction {
  std::int64_t count = 0;
  Complex raw;
  Complex u;
  Complex pieces;  // (-1)^n sum_j gamma(j)_r F(j)_r
};

Prediction predicted_count(const Analysis& an, cg::Tower& tower, unsigned r, const Real& gap);

// Character sum over Ker(A' mod q^r-1) against (-1)^n (q^r-1) sum_j gamma(j)_r tghf(full_j)
cg::IdentityPair star_identity_check(const Analysis& an, cg::Tower& tower, unsigned r);

// values[r-1] = f(r)
struct WeilSeq {
  std::vector<Complex> values;
};

// zeta(f) = num/den, with num = prod (1 - beta T)^{w} over w > 0.
struct ZetaPoly {
  ser::Poly num;
  ser::Poly den;
  std::vector<Complex> betas;
  std::vector<std::int64_t> weights;
  std::size_t degree = 0;  // deg num - deg den
  // false when the degree bound was assumed rather than fitted
  bool certified = true;
};

inline const Real& recurrence_tolerance() {
  static const Real tol = tenth_power(20);
  return tol;
}

// Throws DegreeUndetermined when neither a recurrence of order <= R/2 nor the
// degree bound pins the function down.
ZetaPoly zeta_series(const WeilSeq& f, std::size_t degree_bound = 0);

// Reciprocal roots of the shortest recurrence of f.
std::vector<Complex> weil_roots(const WeilSeq& f);

ZetaPoly zeta_from_terms(const std::vector<GeometricTerm>& terms, int sign);

struct PFactor {
  std::size_t j = 0;
  ZetaPoly zeta;
};

struct Assembly {
  std::vector<BigInt> coeffs;  // P(T), constant term first
  std::size_t expected_degree = 0;
  int sign = 1;  // (-1)^{n+1}
  unsigned horizon = 0;
  std::vector<PFactor> factors;
  ZetaPoly u_zeta;
  std::int64_t D = 0;
  ser::Poly pieces_product;  // prod_j zeta(-gamma(j) F(j))
};

inline constexpr std::uint64_t kHorizonLevelBudget = 200'000;

// 2 * (largest reduced arity), at least 2, lowered until q^R <= level_budget
unsigned default_horizon(const Analysis& an, std::uint64_t level_budget = kHorizonLevelBudget);

// (n^{n+1} + (-1)^{n+1} n)/(n+1)
std::size_t expected_degree(int n);

// P(T) with zeta(X, T) = P(T)^{(-1)^n} / prod_{i<n}(1 - q^i T), from the
// pieces at levels 1..horizon. Throws IntegralityError when a coefficient is
// not an integer or the product is not a polynomial.
Assembly assemble_P(const Analysis& an, cg::Tower& tower, unsigned horizon, const Real& gap);

// P(T)^{(-1)^n} as a series through T^R from point counts N_1..N_R
ser::Poly p_power_from_counts(const std::vector<std::int64_t>& counts, int n, std::uint64_t q);

// weight -> multiplicity of the reciprocal roots, binned against q^{k/2}
std::map<int, std::size_t> classify_weights(const ser::Poly& poly, std::uint64_t q, const Real& rel_tol);
// exact multiplicities through the square-free decomposition
std::map<int, std::size_t> classify_weights(const std::vector<BigInt>& poly, std::uint64_t q, const Real& rel_tol);

ser::Poly to_poly(const std::vector<BigInt>& coeffs);

}  // namespace hgzeta::zeta
