// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace hgzeta::ff {

// Canonical element code: sum of coefficient_i * p^i in F_p[x]/(h).
using Elem = std::uint32_t;

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 24;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// F_{p^k}, tables indexed by element code and by discrete logarithm.
class FiniteField {
public:
  // modulus: lowest irreducible; generator: smallest primitive element
  FiniteField(std::uint32_t p, unsigned k, std::uint64_t cap = kDefaultCap);

  std::uint32_t p() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t order() const { return size_ - 1; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem generator() const { return gen_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
    if (s >= order()) s -= order();
    return exp_[s];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;

  // log_g(a) for a != 0
  std::uint32_t log(Elem a) const { return log_[a]; }
  Elem exp(std::uint64_t k) const { return exp_[k % order()]; }
  // log(1 + g^k), or -1 encoded as order() when 1 + g^k = 0
  std::uint32_t zech(std::uint32_t k) const { return zech_[k]; }

  Elem from_int(std::int64_t v) const;
  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;

  // Tr_{F_{p^k}/F_p}
  std::uint32_t trace(Elem a) const { return trace_[a]; }

  // Frobenius x -> x^p
  Elem frobenius(Elem a, unsigned times = 1) const;

  // Regenerate tables around a new primitive element.
  void rebase(Elem new_generator);

private:
  void build_tables(Elem gen);

  std::uint32_t p_;
  unsigned k_;
  std::uint64_t size_;
  std::vector<std::uint32_t> modulus_;  // monic, low degree first, length k+1
  Elem gen_ = 0;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;
  std::vector<std::uint32_t> trace_;
};

// F_{q^r} over F_q = F_{p^f}, with a tower-compatible generator.
struct FieldCtx {
  std::uint32_t p = 0;
  unsigned f = 0;
  unsigned r = 0;
  std::uint64_t q = 0;
  std::shared_ptr<const FiniteField> base;   // F_q
  std::shared_ptr<const FiniteField> level;  // F_{q^r}
  std::uint64_t lift = 1;                    // (q^r - 1)/(q - 1)
  std::vector<Elem> embedding;               // base code -> level code

  Elem embed(Elem x) const { return embedding[x]; }
  // Norm_{F_{q^r}/F_q} as a base-field code.
  Elem norm_index(Elem x) const;
};

struct FqElem {
  Elem code = 0;
  unsigned level = 1;
};

std::shared_ptr<const FieldCtx> build_field(std::uint32_t p, unsigned f, unsigned r, std::uint64_t cap = kDefaultCap);

struct TraceNorm {
  std::uint32_t trace = 0;  // Tr to F_p
  Elem norm = 0;            // Norm to F_q, as a base code
};

// Computed from Frobenius conjugates.
TraceNorm trace_norm(const FieldCtx& ctx, Elem x);

}  // namespace hgzeta::ff
