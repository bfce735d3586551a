// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hgzeta/ffield.hpp"
#include "hgzeta/numeric.hpp"

namespace hgzeta::cg {

// chi = rho_r^k, rho_r(g_r) = e^{2 pi i / (q^r - 1)}
struct CharacterIndex {
  std::int64_t k = 0;
  unsigned level = 1;

  bool trivial(std::uint64_t order) const { return k % static_cast<std::int64_t>(order) == 0; }
};

// Characters, the additive character theta_r and all Gauss sums of one
// level F_{q^r}. Read-only after construction.
class Level {
public:
  explicit Level(std::shared_ptr<const ff::FieldCtx> field);

  const ff::FieldCtx& field() const { return *field_; }
  const ff::FiniteField& F() const { return *field_->level; }
  unsigned r() const { return field_->r; }
  std::uint64_t q() const { return field_->q; }
  std::uint64_t size() const { return F().size(); }
  // q^r - 1
  std::int64_t order() const { return order_; }
  // (q^r - 1)/(q - 1)
  std::int64_t lift() const { return static_cast<std::int64_t>(field_->lift); }

  std::int64_t reduce(std::int64_t k) const {
    k %= order_;
    return k < 0 ? k + order_ : k;
  }

  // e^{2 pi i j/(q^r - 1)}
  const Complex& root(std::int64_t j) const { return unity_[static_cast<std::size_t>(reduce(j))]; }
  // e^{2 pi i Tr(x)/p}
  const Complex& theta(ff::Elem x) const { return additive_[F().trace(x)]; }

  // rho_r^k(x) for x a level code, 0 at x = 0
  Complex chi(std::int64_t k, ff::Elem x) const;
  // rho_r^k(-1) as +-1
  int chi_minus_one(std::int64_t k) const;
  Complex eval(const CharacterIndex& c, const ff::FqElem& x) const;

  const Complex& gauss(std::int64_t k) const { return gauss_[static_cast<std::size_t>(reduce(k))]; }
  const std::vector<Complex>& gauss_table() const { return gauss_; }

  // index of phi_beta^s = rho^{s (q^r-1)/beta}; beta must divide q^r - 1
  std::int64_t phi(std::int64_t beta, std::int64_t s = 1) const;
  // level-1 index k mapped to the index of (rho^k) o Norm at this level
  std::int64_t lifted(std::int64_t k) const { return reduce(k * lift()); }
  // base-field code embedded into this level
  ff::Elem embed(ff::Elem base_code) const { return field_->embed(base_code); }

private:
  std::shared_ptr<const ff::FieldCtx> field_;
  std::int64_t order_;
  std::vector<Complex> unity_;
  std::vector<Complex> additive_;
  std::vector<Complex> gauss_;
};

// Direct sum over F_{q^r}^x with freshly computed roots of unity.
Complex gauss_sum_direct(const Level& level, std::int64_t k);

// All Gauss sums of a level by a length q^r - 1 transform of theta(g^m).
// additive[t] = e^{2 pi i t/p}
std::vector<Complex> gauss_table_transform(const ff::FiniteField& F, const std::vector<Complex>& additive);

struct IdentityPair {
  Complex lhs;
  Complex rhs;
  Real residual() const { return distance(lhs, rhs); }
};

class Tower;

// (-G(chi_r), (-G(chi))^r) for chi = rho^k at level 1.
IdentityPair dh_lift_check(Tower& tower, std::int64_t k, unsigned r);

// G(chi^beta) against chi(beta^beta) G(chi) prod_{s<beta} G(chi phi_beta^s)/G(phi_beta^s).
IdentityPair dh_multiplication(const Level& level, std::int64_t k, std::int64_t beta);

// Levels F_{q^r} of one base field, built on first use.
class Tower {
public:
  Tower(std::uint32_t p, unsigned f, std::uint64_t cap = ff::kDefaultCap) : p_(p), f_(f), cap_(cap) {}

  std::shared_ptr<const Level> level(unsigned r);
  std::uint32_t p() const { return p_; }
  unsigned f() const { return f_; }
  std::uint64_t q();

private:
  std::uint32_t p_;
  unsigned f_;
  std::uint64_t cap_;
  std::mutex mu_;
  std::map<unsigned, std::shared_ptr<const Level>> levels_;
};

}  // namespace hgzeta::cg
