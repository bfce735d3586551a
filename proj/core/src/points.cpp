// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "hgzeta/points.hpp"

#include "hgzeta/parallel.hpp"

namespace hgzeta::pts {

Polynomial::Polynomial(const ff::FiniteField& F, std::vector<Term> terms) : F_(&F) {
  for (auto& t : terms)
    if (t.coef != 0) terms_.push_back(std::move(t));
}

ff::Elem Polynomial::eval(const std::vector<std::uint32_t>& logs, const std::vector<char>& zero) const {
  const std::uint64_t order = F_->order();
  ff::Elem acc = 0;
  for (const auto& t : terms_) {
    std::uint64_t e = F_->log(t.coef);
    bool vanishes = false;
    for (std::size_t j = 0; j < t.exps.size(); ++j) {
      if (t.exps[j] == 0) continue;
      if (zero[j]) {
        vanishes = true;
        break;
      }
      e += std::uint64_t{t.exps[j]} * logs[j];
    }
    if (!vanishes) acc = F_->add(acc, F_->exp(e % order));
  }
  return acc;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exps[var] == 0) continue;
    Term d = t;
    d.coef = F_->mul(t.coef, F_->from_int(t.exps[var]));
    d.exps[var] -= 1;
    out.push_back(std::move(d));
  }
  return Polynomial(*F_, std::move(out));
}

std::uint64_t projective_size(std::uint64_t field_size, std::size_t vars, std::uint64_t limit) {
  std::uint64_t total = 0, block = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    total += block;
    if (total > limit) return 0;
    if (i + 1 < vars) {
      if (block > limit / field_size) return 0;
      block *= field_size;
    }
  }
  return total;
}

void for_each_projective_point(const ff::FiniteField& F, std::size_t vars, unsigned threads,
                               const std::function<void(const std::vector<ff::Elem>&, unsigned)>& visit,
                               const std::function<bool()>& stop) {
  const std::uint64_t size = F.size();
  for (std::size_t lead = 0; lead < vars; ++lead) {
    const std::size_t free = vars - lead - 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free; ++i) count *= size;
    parallel_chunks(count, threads, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
      std::vector<ff::Elem> x(vars, 0);
      x[lead] = 1;
      std::uint64_t idx = b;
      for (std::size_t i = 0; i < free; ++i) {
        x[vars - 1 - i] = static_cast<ff::Elem>(idx % size);
        idx /= size;
      }
      for (std::uint64_t it = b; it < e; ++it) {
        if (stop && (it & 0xffff) == 0 && stop()) return;
        visit(x, w);
        for (std::size_t i = 0; i < free; ++i) {
          auto& d = x[vars - 1 - i];
          if (++d < size) break;
          d = 0;
        }
      }
    });
  }
}

}  // namespace hgzeta::pts
