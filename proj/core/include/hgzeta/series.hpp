// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "hgzeta/numeric.hpp"

namespace hgzeta::ser {

// Coefficients, constant term first.
using Poly = std::vector<Complex>;

Poly mul(const Poly& a, const Poly& b);
// a*b truncated to degree < n
Poly series_mul(const Poly& a, const Poly& b, std::size_t n);
// 1/a to degree < n; a[0] must be nonzero
Poly series_inv(const Poly& a, std::size_t n);
// a^e to degree < n, e may be negative
Poly series_pow(const Poly& a, std::int64_t e, std::size_t n);
// exp(-sum_{r>=1} f(r) T^r / r) to degree <= f.size(), f[0] = f(1)
Poly zeta_exp(const std::vector<Complex>& f);

// Complex roots of a polynomial of exact degree deg (Aberth iteration).
std::vector<Complex> roots(const Poly& p);

// Gaussian elimination with partial pivoting; empty result when singular.
std::vector<Complex> solve(std::vector<std::vector<Complex>> m, std::vector<Complex> rhs);

struct Recurrence {
  // v_r = -sum_{k=1}^{L} c_k v_{r-k} for all fitted r; c[0] = 1
  Poly charpoly_rev;
  std::size_t order = 0;
  Real residual = 0;  // worst relative residual on the checked equations
};

// Shortest linear recurrence satisfied by values[0..R) within relative tol,
// using only orders L with 2L <= R.
std::optional<Recurrence> fit_recurrence(const std::vector<Complex>& values, const Real& tol);

// Reciprocal roots beta_k of a recurrence, i.e. values_r = sum w_k beta_k^r.
std::vector<Complex> recurrence_roots(const Recurrence& rec);

// Least-error integer multiplicities w_k with values_r = sum w_k beta_k^r
// (r = 1..L), or nothing when they are not integral within gap.
std::optional<std::vector<std::int64_t>> integer_weights(const std::vector<Complex>& values,
                                                         const std::vector<Complex>& betas, const Real& gap);

Real max_abs(const Poly& p);

// Square-free factors f_m of an integer polynomial, f = c prod f_m^m, as
// (m, f_m) with primitive integer coefficients.
std::vector<std::pair<std::size_t, std::vector<BigInt>>> squarefree_decomposition(const std::vector<BigInt>& f);

}  // namespace hgzeta::ser
