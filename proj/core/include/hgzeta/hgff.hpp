// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "hgzeta/chargauss.hpp"

namespace hgzeta::hg {

// Character indices rho_r^k of one level.
struct ParamList {
  std::vector<std::int64_t> upper;
  std::vector<std::int64_t> lower;
  unsigned level = 1;

  std::size_t arity() const { return upper.size(); }
  friend bool operator==(const ParamList&, const ParamList&) = default;
};

// Indices of F_q-characters composed with the norm to F_{q^r}.
ParamList lift(const ParamList& base, const cg::Level& level);

// (1/(Q-1)) sum_chi prod G(A chi)/G(A) prod G(conj(B chi))/G(conj B) chi(-1)^arity chi(x)
Complex tghf(const cg::Level& level, const ParamList& params, ff::Elem x);

// tghf with the trivial character appended to the lower list
Complex ghf(const cg::Level& level, std::vector<std::int64_t> upper, std::vector<std::int64_t> lower, ff::Elem x);

struct Reduction {
  ParamList reduced;
  std::vector<std::int64_t> common;  // sorted
  std::size_t trivial_pairs = 0;     // common trivial characters
};

Reduction reduce_params(const ParamList& params, std::int64_t order);

struct Cancellation {
  Complex factor;      // 1, or Q when the common character is trivial
  Complex correction;  // full = factor * residual + correction
};

// residual holds the parameters without the common pair
Cancellation cancellation_correction(const cg::Level& level, std::int64_t common, const ParamList& residual,
                                     ff::Elem x);

// prod G(A_i) G(B_i) * tghf(params, 1/x)
Complex sheaf_trace(const cg::Level& level, const ParamList& params, ff::Elem x);

// sum_chi prod G(conj(A_i chi)^{alpha_i}) G((B chi)^alpha) chi((-1)^alpha x) against
// (Q-1) prod A_i(alpha_i^{-alpha_i}) B(alpha^alpha) * Gauss prefactor * tghf(B[phi_alpha]; A_i[phi_alpha_i]; y)
// with y = alpha^alpha / prod alpha_i^{alpha_i} * x
cg::IdentityPair multi_hyper_check(const cg::Level& level, const std::vector<std::int64_t>& alphas,
                                   const std::vector<std::int64_t>& a, std::int64_t b, ff::Elem x);

// B[phi_beta] = (B, B phi_beta, ..., B phi_beta^{beta-1})
std::vector<std::int64_t> bracket(const cg::Level& level, std::int64_t b, std::int64_t beta);

}  // namespace hgzeta::hg
