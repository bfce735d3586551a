// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Independent reference computations used only by tests.

#pragma once

#include <cstdint>
#include <vector>

#include <map>

#include "hgzeta/chargauss.hpp"
#include "hgzeta/hgff.hpp"
#include "hgzeta/intlin.hpp"

namespace oracle {

using hgzeta::BigInt;
using hgzeta::intlin::IntMatrix;

inline IntMatrix dwork_matrix(int n) {
  IntMatrix a(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) a(i, i) = n + 1;
  return a;
}

// T1^4 + T1 T2^3 + T3^4 + T4^4
inline IntMatrix yu_yui_matrix() { return IntMatrix::from_rows({{4, 1, 0, 0}, {0, 3, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 4}}); }

// T1^3 T3 + T2^3 T4 + T3^3 T1 + T4^3 T2
inline IntMatrix cycle_matrix() { return IntMatrix::from_rows({{3, 0, 1, 0}, {0, 3, 0, 1}, {1, 0, 3, 0}, {0, 1, 0, 3}}); }

inline bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  std::int64_t p = 2;
  while (q % p) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

inline BigInt det_cofactor(const IntMatrix& m) {
  std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  BigInt acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    BigInt sub = det_cofactor(m.select_rows(rows).select_columns(cols));
    acc += (j % 2 ? -1 : 1) * m(0, j) * sub;
  }
  return acc;
}

// g_k = gcd of all k x k minors, k = 1..min(rows, cols)
inline std::vector<BigInt> determinantal_divisors(const IntMatrix& m) {
  std::size_t kmax = std::min(m.rows(), m.cols());
  std::vector<BigInt> out;
  for (std::size_t k = 1; k <= kmax; ++k) {
    BigInt g = 0;
    for (const auto& rs : hgzeta::intlin::subsets_of_size(m.rows(), k))
      for (const auto& cs : hgzeta::intlin::subsets_of_size(m.cols(), k)) {
        BigInt d = det_cofactor(m.select_rows(rs).select_columns(cs));
        g = boost::multiprecision::gcd(g, d < 0 ? BigInt(-d) : d);
      }
    out.push_back(g);
  }
  return out;
}

inline std::vector<std::vector<std::int64_t>> kernel_bruteforce(const IntMatrix& m, std::int64_t mod) {
  std::vector<std::vector<std::int64_t>> out;
  std::size_t c = m.cols();
  std::vector<std::int64_t> k(c, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < m.rows() && ok; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < c; ++j) acc += m(i, j) * k[j];
      ok = acc % mod == 0;
    }
    if (ok) out.push_back(k);
    std::size_t i = c;
    while (i > 0 && ++k[i - 1] == mod) k[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// number of J, #J = (n+1)/2, such that every column has an entry >= 1 in a row outside J
inline std::int64_t count_D_bruteforce(const IntMatrix& a) {
  std::size_t n1 = a.rows();
  if (n1 % 2) return 0;
  std::int64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n1); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n1 / 2) continue;
    bool all = true;
    for (std::size_t i = 0; i < a.cols(); ++i) {
      bool some = false;
      for (std::size_t j = 0; j < n1; ++j)
        if (!(mask >> j & 1) && a(j, i) >= 1) some = true;
      all = all && some;
    }
    if (all) ++count;
  }
  return count;
}

// Hypergeometric sum recomputed term by term: every Gauss sum by a direct
// field sum, every character value by fresh trigonometry.
inline hgzeta::Complex tghf_fresh(const hgzeta::cg::Level& level, const hgzeta::hg::ParamList& params,
                                  hgzeta::ff::Elem x) {
  using hgzeta::Complex;
  const auto& F = level.F();
  const std::int64_t m = level.order();
  std::map<std::int64_t, Complex> cache;
  auto G = [&](std::int64_t k) {
    k = ((k % m) + m) % m;
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, hgzeta::cg::gauss_sum_direct(level, k)).first;
    return it->second;
  };
  if (x == 0) return Complex();
  hgzeta::ff::Elem minus_one = F.neg(1);
  Complex sum;
  for (std::int64_t k = 0; k < m; ++k) {
    Complex term(1);
    for (auto a : params.upper) term = term * G(a + k) / G(a);
    for (auto b : params.lower) term = term * G(-(b + k)) / G(-b);
    for (std::size_t i = 0; i < params.upper.size(); ++i) term = term * hgzeta::unit_root(k * F.log(minus_one), m);
    term = term * hgzeta::unit_root(k * F.log(x), m);
    sum += term;
  }
  return sum / hgzeta::Real(m);
}

}  // namespace oracle
