// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hgzeta/ffield.hpp"

namespace hgzeta::pts {

struct Term {
  ff::Elem coef = 0;  // level code
  std::vector<std::uint32_t> exps;
};

// Sparse polynomial over one field, evaluated through discrete logarithms.
class Polynomial {
public:
  Polynomial(const ff::FiniteField& F, std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  // logs[j] is log x_j, ignored where zero[j]
  ff::Elem eval(const std::vector<std::uint32_t>& logs, const std::vector<char>& zero) const;
  Polynomial derivative(std::size_t var) const;

private:
  const ff::FiniteField* F_;
  std::vector<Term> terms_;
};

// Number of points of P^{vars-1}(F), or 0 on overflow past limit.
std::uint64_t projective_size(std::uint64_t field_size, std::size_t vars, std::uint64_t limit);

// Visits every projective point (first nonzero coordinate 1) split into
// contiguous chunks; visit(coords, worker) runs on the worker's thread.
void for_each_projective_point(const ff::FiniteField& F, std::size_t vars, unsigned threads,
                               const std::function<void(const std::vector<ff::Elem>&, unsigned)>& visit,
                               const std::function<bool()>& stop = nullptr);

}  // namespace hgzeta::pts
