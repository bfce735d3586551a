// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "hgzeta/hgff.hpp"

#include <algorithm>

#include "hgzeta/errors.hpp"

namespace hgzeta::hg {

namespace {

void check_level(const cg::Level& level, const ParamList& params) {
  if (params.level != level.r()) {
    throw LevelMismatch("parameters at level " + std::to_string(params.level) + ", field at level " +
                        std::to_string(level.r()));
  }
  if (params.upper.size() != params.lower.size()) {
    throw ConfigError("upper and lower parameter lists differ in length");
  }
}

}  // namespace

ParamList lift(const ParamList& base, const cg::Level& level) {
  if (base.level != 1) throw LevelMismatch("only level-1 parameters can be lifted");
  ParamList out;
  out.level = level.r();
  for (auto a : base.upper) out.upper.push_back(level.lifted(a));
  for (auto b : base.lower) out.lower.push_back(level.lifted(b));
  return out;
}

Complex tghf(const cg::Level& level, const ParamList& params, ff::Elem x) {
  check_level(level, params);
  if (x == 0) return Complex();
  const std::int64_t m = level.order();
  const std::int64_t lx = level.F().log(x);
  const bool odd_arity = params.arity() % 2 == 1 && level.F().p() != 2;
  Complex denom(1);
  for (auto a : params.upper) denom *= level.gauss(a);
  for (auto b : params.lower) denom *= level.gauss(-b);
  Complex sum;
  for (std::int64_t k = 0; k < m; ++k) {
    Complex term = level.root(static_cast<std::int64_t>(static_cast<__int128>(k) * lx % m));
    for (auto a : params.upper) term *= level.gauss(a + k);
    for (auto b : params.lower) term *= level.gauss(-(b + k));
    if (odd_arity && k % 2 == 1)
      sum -= term;
    else
      sum += term;
  }
  return sum / denom / Real(m);
}

Complex ghf(const cg::Level& level, std::vector<std::int64_t> upper, std::vector<std::int64_t> lower, ff::Elem x) {
  lower.push_back(0);
  return tghf(level, ParamList{std::move(upper), std::move(lower), level.r()}, x);
}

Reduction reduce_params(const ParamList& params, std::int64_t order) {
  auto norm = [order](std::int64_t k) {
    k %= order;
    return k < 0 ? k + order : k;
  };
  std::vector<std::int64_t> up, lo;
  for (auto a : params.upper) up.push_back(norm(a));
  for (auto b : params.lower) lo.push_back(norm(b));
  std::sort(up.begin(), up.end());
  std::sort(lo.begin(), lo.end());
  Reduction out;
  out.reduced.level = params.level;
  std::size_t i = 0, j = 0;
  while (i < up.size() || j < lo.size()) {
    if (j == lo.size() || (i < up.size() && up[i] < lo[j])) {
      out.reduced.upper.push_back(up[i++]);
    } else if (i == up.size() || lo[j] < up[i]) {
      out.reduced.lower.push_back(lo[j++]);
    } else {
      out.common.push_back(up[i]);
      if (up[i] == 0) ++out.trivial_pairs;
      ++i;
      ++j;
    }
  }
  return out;
}

Cancellation cancellation_correction(const cg::Level& level, std::int64_t common, const ParamList& residual,
                                     ff::Elem x) {
  check_level(level, residual);
  const Real q = Real(static_cast<std::uint64_t>(level.size()));
  Cancellation out;
  if (level.reduce(common) == 0) {
    out.factor = Complex(q);
    out.correction = x == 0 ? Complex() : Complex(-1);
    return out;
  }
  out.factor = Complex(1);
  if (x == 0) return out;
  Complex v(1);
  for (auto a : residual.upper) v *= level.gauss(a - common) / level.gauss(a);
  for (auto b : residual.lower) v *= level.gauss(common - b) / level.gauss(-b);
  if (residual.arity() % 2 == 1) v *= Real(level.chi_minus_one(common));
  v *= level.chi(-common, x);
  out.correction = -(v / q);
  return out;
}

Complex sheaf_trace(const cg::Level& level, const ParamList& params, ff::Elem x) {
  if (x == 0) throw ZeroInput("sheaf trace at x = 0");
  Complex v = tghf(level, params, level.F().inv(x));
  for (auto a : params.upper) v *= level.gauss(a);
  for (auto b : params.lower) v *= level.gauss(b);
  return v;
}

std::vector<std::int64_t> bracket(const cg::Level& level, std::int64_t b, std::int64_t beta) {
  std::vector<std::int64_t> out;
  for (std::int64_t s = 0; s < beta; ++s) out.push_back(level.reduce(b + level.phi(beta, s)));
  return out;
}

cg::IdentityPair multi_hyper_check(const cg::Level& level, const std::vector<std::int64_t>& alphas,
                                   const std::vector<std::int64_t>& a, std::int64_t b, ff::Elem x) {
  if (alphas.size() != a.size()) throw ConfigError("one alpha per upper character required");
  const auto& F = level.F();
  const std::int64_t m = level.order();
  std::int64_t alpha = 0;
  for (auto ai : alphas) alpha += ai;
  ff::Elem sign_x = alpha % 2 ? F.neg(x) : x;

  cg::IdentityPair out;
  for (std::int64_t k = 0; k < m; ++k) {
    Complex term = level.chi(k, sign_x) * level.gauss((b + k) * alpha);
    for (std::size_t i = 0; i < a.size(); ++i) term *= level.gauss(-(a[i] + k) * alphas[i]);
    out.lhs += term;
  }

  ff::Elem scale = F.pow(F.from_int(alpha), alpha);
  ParamList params;
  params.level = level.r();
  params.upper = bracket(level, b, alpha);
  Complex pre = level.chi(b, F.pow(F.from_int(alpha), alpha)) * level.gauss(b);
  for (std::int64_t s = 1; s < alpha; ++s) pre *= level.gauss(b + level.phi(alpha, s)) / level.gauss(level.phi(alpha, s));
  for (std::size_t i = 0; i < a.size(); ++i) {
    ff::Elem pw = F.pow(F.from_int(alphas[i]), alphas[i]);
    scale = F.div(scale, pw);
    pre *= level.chi(a[i], F.inv(pw)) * level.gauss(-a[i]);
    for (std::int64_t s = 1; s < alphas[i]; ++s)
      pre *= level.gauss(-a[i] + level.phi(alphas[i], s)) / level.gauss(level.phi(alphas[i], s));
    for (auto v : bracket(level, a[i], alphas[i])) params.lower.push_back(v);
  }
  out.rhs = pre * Real(m) * tghf(level, params, F.mul(scale, x));
  return out;
}

}  // namespace hgzeta::hg
