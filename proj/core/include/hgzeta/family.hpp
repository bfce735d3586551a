// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgzeta/ffield.hpp"
#include "hgzeta/intlin.hpp"

namespace hgzeta::fam {

// F_lambda = sum_i c_i T^{a_i} - lambda T_1 ... T_{n+1}, column i of A is a_i.
struct FamilySpec {
  std::uint32_t p = 0;
  unsigned f = 1;
  std::uint64_t q = 0;
  int n = 0;
  intlin::IntMatrix A;
  std::vector<ff::Elem> c;  // F_q codes
  intlin::AlphaData alpha;
  ff::Elem C = 0;
  // column i of A is column permutation[i] of the input matrix
  std::vector<std::size_t> permutation;

  std::size_t vars() const { return static_cast<std::size_t>(n) + 1; }
};

// Validates the exponent matrix, normalizes the monomial order, derives alpha
// and C. Throws ConfigError, NotNormalizable, KernelRankError or
// AssumptionViolation.
FamilySpec make_family(std::uint32_t p, unsigned f, const intlin::IntMatrix& A, const std::vector<ff::Elem>& c);

// Column permutation making every diagonal entry n or n+1, off-diagonal
// entries 0 or 1 and at most one 1 per row. Identity when already in form.
std::vector<std::size_t> normalize_columns(const intlin::IntMatrix& A);

// alpha^alpha prod c_i^{alpha_i} / alpha_i^{alpha_i} in F_q
ff::Elem compute_C(const ff::FiniteField& Fq, const std::vector<ff::Elem>& c, const intlin::AlphaData& alpha);

// C lambda^{-alpha}; lambda must be nonzero
ff::Elem hypergeometric_argument(const ff::FiniteField& Fq, const FamilySpec& spec, ff::Elem lambda);

bool is_degenerate(const ff::FiniteField& Fq, const FamilySpec& spec, ff::Elem lambda);

struct SmoothnessVerdict {
  bool singular = false;
  unsigned level = 0;               // extension degree where a singular point was found
  std::vector<ff::Elem> point;      // level codes
  unsigned searched_up_to = 0;      // degrees fully scanned without a singular point
  std::string str() const;
};

// Projective points of F_lambda = 0 = dF/dT_k over F_{q^s}, s <= r_bound,
// stopping early once the point budget is exhausted.
SmoothnessVerdict smoothness_scan(const FamilySpec& spec, ff::Elem lambda, unsigned r_bound,
                                  std::uint64_t point_budget = 50'000'000, unsigned threads = 1);

}  // namespace hgzeta::fam
