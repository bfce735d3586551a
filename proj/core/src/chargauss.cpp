// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "hgzeta/chargauss.hpp"

#include <cmath>

#include "hgzeta/errors.hpp"

namespace hgzeta::cg {

namespace {

// e^{2 pi i j/n} for j = 0..n-1 from two tables of about sqrt(n) trig values
std::vector<Complex> unity_table(std::int64_t n) {
  auto block = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::vector<Complex> lo(static_cast<std::size_t>(block));
  std::vector<Complex> hi(static_cast<std::size_t>((n + block - 1) / block));
  for (std::int64_t b = 0; b < block; ++b) lo[static_cast<std::size_t>(b)] = unit_root(b, n);
  for (std::size_t a = 0; a < hi.size(); ++a) hi[a] = unit_root(static_cast<std::int64_t>(a) * block, n);
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j)
    out[static_cast<std::size_t>(j)] =
        (j % block == 0) ? hi[static_cast<std::size_t>(j / block)]
                         : hi[static_cast<std::size_t>(j / block)] * lo[static_cast<std::size_t>(j % block)];
  return out;
}

// in-place radix-2 transform with roots e^{+2 pi i j/N}, conjugated when inverse
void fft(std::vector<Complex>& a, const std::vector<Complex>& roots, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const Complex& w = inverse ? roots[(n - j * stride) % n] : roots[j * stride];
        Complex v = a[i + j + len / 2] * w;
        a[i + j + len / 2] = a[i + j] - v;
        a[i + j] += v;
      }
    }
  }
}

}  // namespace

std::vector<Complex> gauss_table_transform(const ff::FiniteField& F, const std::vector<Complex>& additive) {
  const auto m = static_cast<std::int64_t>(F.order());
  if (m == 1) return {additive[F.trace(1)]};
  // Bluestein: k m = (k^2 + m^2 - (k - m)^2)/2
  std::vector<Complex> chirp_roots = unity_table(2 * m);
  auto chirp = [&](std::int64_t j) -> const Complex& {
    auto sq = static_cast<std::int64_t>(static_cast<__int128>(j) * j % (2 * m));
    return chirp_roots[static_cast<std::size_t>(sq)];
  };
  std::size_t n = 1;
  while (n < static_cast<std::size_t>(2 * m - 1)) n <<= 1;
  std::vector<Complex> x(n), y(n);
  for (std::int64_t j = 0; j < m; ++j) x[static_cast<std::size_t>(j)] = additive[F.trace(F.exp(j))] * chirp(j);
  y[0] = chirp(0).conj();
  for (std::int64_t j = 1; j < m; ++j) {
    y[static_cast<std::size_t>(j)] = chirp(j).conj();
    y[n - static_cast<std::size_t>(j)] = y[static_cast<std::size_t>(j)];
  }
  std::vector<Complex> roots = unity_table(static_cast<std::int64_t>(n));
  fft(x, roots, false);
  fft(y, roots, false);
  for (std::size_t i = 0; i < n; ++i) x[i] *= y[i];
  fft(x, roots, true);
  const Real scale = Real(1) / Real(static_cast<std::uint64_t>(n));
  std::vector<Complex> out(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) out[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k)] * chirp(k) * scale;
  return out;
}

Level::Level(std::shared_ptr<const ff::FieldCtx> field) : field_(std::move(field)) {
  order_ = static_cast<std::int64_t>(F().order());
  unity_ = unity_table(order_);
  additive_.reserve(F().p());
  for (std::uint32_t t = 0; t < F().p(); ++t) additive_.push_back(unit_root(t, F().p()));
  gauss_ = gauss_table_transform(F(), additive_);
}

Complex Level::chi(std::int64_t k, ff::Elem x) const {
  if (x == 0) return Complex();
  auto e = static_cast<std::int64_t>(static_cast<__int128>(reduce(k)) * F().log(x) % order_);
  return root(e);
}

int Level::chi_minus_one(std::int64_t k) const {
  if (F().p() == 2) return 1;
  return (reduce(k) % 2 == 0) ? 1 : -1;
}

Complex Level::eval(const CharacterIndex& c, const ff::FqElem& x) const {
  if (c.level != r() || x.level != r()) {
    throw LevelMismatch("character at level " + std::to_string(c.level) + ", element at level " +
                        std::to_string(x.level) + ", context at level " + std::to_string(r()));
  }
  return chi(c.k, x.code);
}

std::int64_t Level::phi(std::int64_t beta, std::int64_t s) const {
  if (beta <= 0 || order_ % beta != 0) {
    throw ConfigError(std::to_string(beta) + " does not divide " + std::to_string(order_));
  }
  return reduce(s * (order_ / beta));
}

Complex gauss_sum_direct(const Level& level, std::int64_t k) {
  const auto& F = level.F();
  Complex sum;
  for (std::uint64_t x = 1; x < F.size(); ++x) {
    auto e = static_cast<ff::Elem>(x);
    auto idx = static_cast<std::int64_t>(static_cast<__int128>(level.reduce(k)) * F.log(e) % level.order());
    sum += unit_root(F.trace(e), F.p()) * unit_root(idx, level.order());
  }
  return sum;
}

IdentityPair dh_lift_check(Tower& tower, std::int64_t k, unsigned r) {
  auto base = tower.level(1);
  auto top = tower.level(r);
  return {-top->gauss(top->lifted(k)), pow_int(-base->gauss(k), r)};
}

IdentityPair dh_multiplication(const Level& level, std::int64_t k, std::int64_t beta) {
  IdentityPair out;
  out.lhs = level.gauss(k * beta);
  const auto& F = level.F();
  Complex rhs = level.chi(k, F.pow(F.from_int(beta), beta)) * level.gauss(k);
  for (std::int64_t s = 1; s < beta; ++s) {
    std::int64_t ph = level.phi(beta, s);
    rhs *= level.gauss(k + ph) / level.gauss(ph);
  }
  out.rhs = rhs;
  return out;
}

std::shared_ptr<const Level> Tower::level(unsigned r) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = levels_.find(r);
  if (it != levels_.end()) return it->second;
  auto built = std::make_shared<const Level>(ff::build_field(p_, f_, r, cap_));
  levels_.emplace(r, built);
  return built;
}

std::uint64_t Tower::q() { return level(1)->q(); }

}  // namespace hgzeta::cg
