// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "hgzeta/count.hpp"

#include <sstream>

#include "hgzeta/errors.hpp"
#include "hgzeta/parallel.hpp"
#include "hgzeta/points.hpp"

namespace hgzeta::count {

const char* method_name(Method m) { return m == Method::Brute ? "brute" : "delsarte"; }

std::string format_mask(std::uint32_t mask, std::size_t vars) {
  std::vector<std::size_t> subset;
  for (std::size_t j = 0; j < vars; ++j)
    if (mask >> j & 1u) subset.push_back(j);
  return intlin::format_subset(subset);
}

CountReport brute_count(const fam::FamilySpec& spec, ff::Elem lambda, unsigned r, unsigned threads,
                        std::uint64_t budget) {
  auto field = ff::build_field(spec.p, spec.f, r);
  const ff::FiniteField& F = *field->level;
  const std::size_t m = spec.vars();
  if (pts::projective_size(F.size(), m, budget) == 0) {
    throw BudgetExceeded("enumerating P^" + std::to_string(spec.n) + "(F_" + std::to_string(F.size()) +
                         ") exceeds the budget of " + std::to_string(budget) + " points");
  }
  std::vector<pts::Term> terms;
  for (std::size_t i = 0; i < m; ++i) {
    pts::Term t{field->embed(spec.c[i]), std::vector<std::uint32_t>(m)};
    for (std::size_t j = 0; j < m; ++j) t.exps[j] = static_cast<std::uint32_t>(spec.A.at64(j, i));
    terms.push_back(t);
  }
  terms.push_back(pts::Term{F.neg(field->embed(lambda)), std::vector<std::uint32_t>(m, 1)});
  pts::Polynomial poly(F, terms);

  const unsigned slots = std::max(1u, threads);
  std::vector<std::vector<std::int64_t>> strata(slots, std::vector<std::int64_t>(std::size_t{1} << m, 0));
  pts::for_each_projective_point(F, m, threads, [&](const std::vector<ff::Elem>& x, unsigned w) {
    std::vector<std::uint32_t> logs(m);
    std::vector<char> zero(m);
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j < m; ++j) {
      zero[j] = x[j] == 0;
      if (!zero[j]) {
        logs[j] = F.log(x[j]);
        mask |= 1u << j;
      }
    }
    if (poly.eval(logs, zero) == 0) ++strata[w][mask];
  });

  CountReport out;
  out.r = r;
  out.method = Method::Brute;
  const std::uint32_t full = (1u << m) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::int64_t v = 0;
    for (const auto& s : strata) v += s[mask];
    out.per_torus[mask] = v;
    out.total += v;
    if (mask == full)
      out.star_part += v;
    else
      out.zero_part += v;
  }
  return out;
}

std::int64_t delsarte_torus_count(const cg::Level& level, const intlin::IntMatrix& R, std::size_t vars,
                                  const std::vector<ff::Elem>& coeffs, const Real& gap) {
  const std::int64_t order = level.order();
  const Real Q = Real(static_cast<std::uint64_t>(level.size()));
  const std::size_t monomials = coeffs.size();
  if (monomials == 0) return round_to_int(Complex(pow_real(Real(order), static_cast<std::int64_t>(vars))), gap, "torus count");
  for (auto c : coeffs)
    if (c == 0) throw ConfigError("Delsarte count needs nonzero coefficients");

  intlin::IntMatrix Rt = R.with_ones_row();
  Complex sum;
  intlin::for_each_kernel_vector(Rt, order, [&](const std::vector<std::int64_t>& k) {
    Complex term(1);
    for (std::size_t j = 0; j < monomials; ++j) {
      term *= level.gauss(-k[j]);
      if (k[j] != 0) term *= level.chi(k[j], coeffs[j]);
    }
    sum += term;
  });
  auto e = static_cast<std::int64_t>(vars) + 1 - static_cast<std::int64_t>(monomials);
  Complex value = Complex(pow_real(Real(order), static_cast<std::int64_t>(vars)) / Q) + sum * (pow_real(Real(order), e) / Q);
  return round_to_int(value, gap, "torus count");
}

CountReport delsarte_full_count(const fam::FamilySpec& spec, ff::Elem lambda, const cg::Level& level, const Real& gap) {
  const std::size_t m = spec.vars();
  const auto& F = level.F();
  CountReport out;
  out.r = level.r();
  out.method = Method::Delsarte;
  const std::uint32_t full = (1u << m) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::vector<std::size_t> rows;
    for (std::size_t j = 0; j < m; ++j)
      if (mask >> j & 1u) rows.push_back(j);
    std::vector<std::size_t> cols = intlin::columns_supported_in(spec.A, rows);
    intlin::IntMatrix R = spec.A.select_rows(rows).select_columns(cols);
    std::vector<ff::Elem> coeffs;
    for (auto i : cols) coeffs.push_back(level.embed(spec.c[i]));
    if (mask == full) {
      intlin::IntMatrix ext(m, cols.size() + 1);
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < cols.size(); ++i) ext(j, i) = R(j, i);
        ext(j, cols.size()) = 1;
      }
      R = ext;
      coeffs.push_back(F.neg(level.embed(lambda)));
    }
    std::int64_t affine = delsarte_torus_count(level, R, rows.size(), coeffs, gap);
    if (affine % level.order() != 0) {
      throw RoundingGapError("torus count " + std::to_string(affine) + " on " + format_mask(mask, m) +
                             " is not divisible by q^r - 1");
    }
    std::int64_t v = affine / level.order();
    out.per_torus[mask] = v;
    out.total += v;
    if (mask == full)
      out.star_part += v;
    else
      out.zero_part += v;
  }
  return out;
}

}  // namespace hgzeta::count
