// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgzeta/family.hpp"
#include "hgzeta/ffield.hpp"
#include "hgzeta/numeric.hpp"

namespace hgzeta::padic {

// Element of W(F_q)/p^m: residues of a polynomial of degree < f.
struct PadicElem {
  std::vector<std::int64_t> c;
  friend bool operator==(const PadicElem&, const PadicElem&) = default;
};

// (Z/p^m)[x]/(h~) with h~ the integer lift of the F_q modulus.
class Ring {
public:
  Ring(std::uint32_t p, unsigned f, unsigned m);

  std::uint32_t p() const { return p_; }
  unsigned f() const { return f_; }
  unsigned precision() const { return m_; }
  std::int64_t modulus() const { return pm_; }
  const ff::FiniteField& residue_field() const { return Fq_; }

  PadicElem zero() const;
  PadicElem one() const { return from_int(1); }
  PadicElem from_int(std::int64_t v) const;
  PadicElem from_bigint(const BigInt& v) const;

  PadicElem add(const PadicElem& a, const PadicElem& b) const;
  PadicElem sub(const PadicElem& a, const PadicElem& b) const;
  PadicElem neg(const PadicElem& a) const;
  PadicElem mul(const PadicElem& a, const PadicElem& b) const;
  PadicElem scale(const PadicElem& a, std::int64_t s) const;
  PadicElem pow(PadicElem a, BigInt e) const;
  // throws ZeroInput on non-units
  PadicElem inv(const PadicElem& a) const;

  bool is_unit(const PadicElem& a) const { return reduce(a) != 0; }
  // min p-adic valuation of the coefficients, m for zero
  unsigned valuation(const PadicElem& a) const;

  // lift of x -> x^p
  PadicElem sigma(const PadicElem& a, unsigned times = 1) const;
  PadicElem teichmuller(ff::Elem code) const;
  ff::Elem reduce(const PadicElem& a) const;
  PadicElem lift(ff::Elem code) const;

  std::int64_t mulmod(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % pm_);
  }
  std::int64_t inv_int(std::int64_t a) const;

  std::string str(const PadicElem& a) const;

private:
  std::int64_t norm(std::int64_t v) const {
    v %= pm_;
    return v < 0 ? v + pm_ : v;
  }

  std::uint32_t p_;
  unsigned f_;
  unsigned m_;
  std::int64_t pm_;
  ff::FiniteField Fq_;
  std::vector<std::int64_t> h_;  // monic, low degree first, length f+1
  PadicElem frob_x_;             // sigma(x)
};

inline constexpr std::uint64_t kTermBudget = 50'000'000;

// prod teichmuller(c_i)^{alpha_i}, so that the series argument C~ x carries
// alpha^alpha / prod alpha_i^{alpha_i} inside the coefficients
PadicElem coefficient_product(const Ring& R, const fam::FamilySpec& spec);

// sum_{k < p^s} (k alpha)!/prod (k alpha_i)! (coefficient_product * x)^k
PadicElem eval_F_trunc(const Ring& R, const fam::FamilySpec& spec, const PadicElem& x, unsigned s);

// F_{1,1}(lambda^{-alpha}) in F_q
ff::Elem criterion_residue(const fam::FamilySpec& spec, ff::Elem lambda);

struct UnitRootReport {
  ff::Elem residue = 0;                // F_{1,1}(lambda^{-alpha}) mod p
  std::optional<PadicElem> value;      // the unit root when residue != 0
  std::optional<PadicElem> f_value;    // f(lambda~^{-alpha})
};

// Throws StabilizationError when consecutive truncation ratios disagree mod
// p^m and BudgetExceeded when p^{m+1} series terms exceed kTermBudget.
UnitRootReport unit_root(const fam::FamilySpec& spec, ff::Elem lambda, unsigned m);

struct FglPair {
  PadicElem multinomial;
  PadicElem hypergeometric;
};

// Coefficient of tau^{m+1}/(m+1) in the formal-group logarithm, two ways.
FglPair fgl_log_coefficient(const Ring& R, const fam::FamilySpec& spec, const PadicElem& Lambda, std::uint64_t m);

// a_1 is a unit
bool height_one_test(const Ring& R, const PadicElem& a1);

// Length of the slope-0 segment of the Newton polygon of P (constant term 1).
std::size_t unit_reciprocal_roots(const std::vector<BigInt>& P, std::uint32_t p);

// P(1/gamma)
PadicElem eval_at_inverse(const Ring& R, const std::vector<BigInt>& P, const PadicElem& gamma);

}  // namespace hgzeta::padic
