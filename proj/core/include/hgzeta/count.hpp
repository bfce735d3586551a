// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hgzeta/chargauss.hpp"
#include "hgzeta/family.hpp"

namespace hgzeta::count {

enum class Method { Brute, Delsarte };

const char* method_name(Method m);

struct CountReport {
  unsigned r = 1;
  std::int64_t total = 0;
  std::int64_t zero_part = 0;
  std::int64_t star_part = 0;
  // bit j set <=> x_{j+1} != 0
  std::map<std::uint32_t, std::int64_t> per_torus;
  Method method = Method::Brute;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

// Projective enumeration of X_lambda(F_{q^r}).
CountReport brute_count(const fam::FamilySpec& spec, ff::Elem lambda, unsigned r, unsigned threads = 1,
                        std::uint64_t budget = kDefaultBudget);

// Solutions in (F_Q^x)^vars of sum_j coeffs_j x^{R column j} = 0, by the
// character-sum formula over Ker(R with a ones row) mod Q-1. An empty column
// set means the zero polynomial.
std::int64_t delsarte_torus_count(const cg::Level& level, const intlin::IntMatrix& R, std::size_t vars,
                                  const std::vector<ff::Elem>& coeffs, const Real& gap);

// Every vanishing stratum counted by delsarte_torus_count.
CountReport delsarte_full_count(const fam::FamilySpec& spec, ff::Elem lambda, const cg::Level& level, const Real& gap);

std::string format_mask(std::uint32_t mask, std::size_t vars);

}  // namespace hgzeta::count
