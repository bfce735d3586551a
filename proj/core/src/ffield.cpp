// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "hgzeta/ffield.hpp"

#include <numeric>
#include <string>

#include "hgzeta/errors.hpp"

namespace hgzeta::ff {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    std::int64_t qq = r / nr;
    t -= qq * nt;
    std::swap(t, nt);
    r -= qq * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  return poly_mod(std::move(c), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly acc{1};
  acc = poly_mod(acc, m, p);
  base = poly_mod(base, m, p);
  while (e) {
    if (e & 1) acc = poly_mulmod(acc, base, m, p);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, m, p);
  }
  return acc;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool irreducible(const Poly& h, std::uint32_t p) {
  const std::size_t k = h.size() - 1;
  if (k == 1) return true;
  Poly x{0, 1};
  // x^{p^i} mod h
  auto frob_iter = [&](std::size_t times) {
    Poly y = x;
    for (std::size_t i = 0; i < times; ++i) y = poly_powmod(y, p, h, p);
    return y;
  };
  if (poly_sub(frob_iter(k), x, p) != Poly{}) return false;
  for (auto l : prime_factors(k)) {
    Poly g = poly_gcd(h, poly_sub(frob_iter(k / l), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

FiniteField::FiniteField(std::uint32_t p, unsigned k, std::uint64_t cap) : p_(p), k_(k), size_(1) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (k == 0) throw ConfigError("field degree must be positive");
  for (unsigned i = 0; i < k; ++i) {
    size_ *= p;
    if (size_ > cap) throw CapExceeded("field of size " + std::to_string(p) + "^" + std::to_string(k) + " exceeds cap");
  }
  for (std::uint64_t c = 0; c < size_; ++c) {
    Poly h = digits(static_cast<Elem>(c));
    h.push_back(1);
    if (h[0] == 0 && k > 1) continue;
    if (irreducible(h, p)) {
      modulus_ = h;
      break;
    }
  }
  std::vector<std::uint64_t> factors = prime_factors(order());
  for (std::uint64_t c = 1; c < size_; ++c) {
    Poly g = digits(static_cast<Elem>(c));
    trim(g);
    bool primitive = true;
    for (auto l : factors) {
      if (poly_powmod(g, order() / l, modulus_, p) == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (order() == 1 || primitive) {
      build_tables(static_cast<Elem>(c));
      break;
    }
  }
  std::vector<std::uint32_t> basis_trace(k);
  for (unsigned i = 0; i < k; ++i) {
    Poly xi(i + 1, 0);
    xi[i] = 1;
    Elem e = from_digits(poly_mod(xi, modulus_, p));
    Elem acc = 0, conj = e;
    for (unsigned j = 0; j < k; ++j) {
      acc = add(acc, conj);
      conj = pow(conj, p);
    }
    basis_trace[i] = acc;
  }
  trace_.assign(size_, 0);
  for (std::uint64_t c = 0; c < size_; ++c) {
    std::uint64_t t = 0, v = c;
    for (unsigned i = 0; i < k; ++i, v /= p) t += (v % p) * basis_trace[i];
    trace_[c] = static_cast<std::uint32_t>(t % p);
  }
}

void FiniteField::build_tables(Elem gen) {
  gen_ = gen;
  exp_.assign(order(), 0);
  log_.assign(size_, 0xFFFFFFFFu);
  Poly g = digits(gen);
  trim(g);
  Poly cur{1};
  for (std::uint64_t i = 0; i < order(); ++i) {
    Elem e = from_digits(cur);
    exp_[i] = e;
    log_[e] = static_cast<std::uint32_t>(i);
    cur = poly_mulmod(cur, g, modulus_, p_);
  }
  zech_.assign(order(), 0);
  for (std::uint64_t i = 0; i < order(); ++i) {
    Elem s = add(1, exp_[i]);
    zech_[i] = s == 0 ? static_cast<std::uint32_t>(order()) : log_[s];
  }
}

void FiniteField::rebase(Elem new_generator) {
  std::uint64_t l = log_[new_generator];
  if (std::gcd(l, order()) != 1) throw std::invalid_argument("rebase target is not primitive");
  std::vector<Elem> old = exp_;
  gen_ = new_generator;
  for (std::uint64_t i = 0; i < order(); ++i) {
    Elem e = old[static_cast<std::uint64_t>((static_cast<unsigned __int128>(i) * l) % order())];
    exp_[i] = e;
    log_[e] = static_cast<std::uint32_t>(i);
  }
  for (std::uint64_t i = 0; i < order(); ++i) {
    Elem s = add(1, exp_[i]);
    zech_[i] = s == 0 ? static_cast<std::uint32_t>(order()) : log_[s];
  }
}

Elem FiniteField::add(Elem a, Elem b) const {
  if (k_ == 1) return static_cast<Elem>((std::uint64_t{a} + b) % p_);
  Elem out = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

Elem FiniteField::neg(Elem a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Elem out = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw ZeroInput("inverse of zero");
  std::uint32_t l = log_[a];
  return l == 0 ? exp_[0] : exp_[order() - l];
}

Elem FiniteField::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw ZeroInput("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  std::int64_t m = static_cast<std::int64_t>(order());
  std::int64_t r = static_cast<std::int64_t>((static_cast<__int128>(log_[a]) * (e % m)) % m);
  if (r < 0) r += m;
  return exp_[r];
}

Elem FiniteField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> FiniteField::digits(Elem a) const {
  std::vector<std::uint32_t> d(k_);
  for (unsigned i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
  return d;
}

Elem FiniteField::from_digits(const std::vector<std::uint32_t>& d) const {
  Elem out = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i, mult *= p_) out += (i < d.size() ? d[i] : 0) * mult;
  return out;
}

Elem FiniteField::frobenius(Elem a, unsigned times) const {
  for (unsigned i = 0; i < times; ++i) a = pow(a, p_);
  return a;
}

Elem FieldCtx::norm_index(Elem x) const {
  if (x == 0) return 0;
  return base->exp(level->log(x) % base->order());
}

std::shared_ptr<const FieldCtx> build_field(std::uint32_t p, unsigned f, unsigned r, std::uint64_t cap) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (f == 0 || r == 0) throw ConfigError("field degrees must be positive");
  auto ctx = std::make_shared<FieldCtx>();
  ctx->p = p;
  ctx->f = f;
  ctx->r = r;
  auto base = std::make_shared<FiniteField>(p, f, cap);
  ctx->q = base->size();
  ctx->base = base;
  if (r == 1) {
    ctx->level = base;
    ctx->lift = 1;
    ctx->embedding.resize(base->size());
    std::iota(ctx->embedding.begin(), ctx->embedding.end(), 0);
    return ctx;
  }
  auto level = std::make_shared<FiniteField>(p, f * r, cap);
  const std::uint64_t lift = level->order() / base->order();

  // minimal polynomial of g_1 over F_p, coefficients in F_p
  std::vector<Elem> conj;
  Elem g1 = base->generator();
  Elem c = g1;
  do {
    conj.push_back(c);
    c = base->pow(c, p);
  } while (c != g1);
  std::vector<Elem> minpoly{1};
  for (Elem root : conj) {
    std::vector<Elem> next(minpoly.size() + 1, 0);
    for (std::size_t i = 0; i < minpoly.size(); ++i) {
      next[i + 1] = base->add(next[i + 1], minpoly[i]);
      next[i] = base->sub(next[i], base->mul(minpoly[i], root));
    }
    minpoly = std::move(next);
  }
  auto satisfies = [&](Elem y) {
    Elem acc = 0;
    for (std::size_t i = minpoly.size(); i-- > 0;) acc = level->add(level->mul(acc, y), level->from_int(minpoly[i]));
    return acc == 0;
  };
  Elem chosen = 0;
  for (std::uint64_t code = 1; code < level->size(); ++code) {
    Elem x = static_cast<Elem>(code);
    if (std::gcd(std::uint64_t{level->log(x)}, level->order()) != 1) continue;
    if (satisfies(level->pow(x, static_cast<std::int64_t>(lift)))) {
      chosen = x;
      break;
    }
  }
  level->rebase(chosen);
  ctx->level = level;
  ctx->lift = lift;
  ctx->embedding.assign(base->size(), 0);
  for (std::uint64_t e = 0; e < base->order(); ++e) {
    ctx->embedding[base->exp(e)] = level->exp(e * lift);
  }
  return ctx;
}

TraceNorm trace_norm(const FieldCtx& ctx, Elem x) {
  const FiniteField& L = *ctx.level;
  TraceNorm out;
  Elem conj = x, tr = 0;
  for (unsigned i = 0; i < L.degree(); ++i) {
    tr = L.add(tr, conj);
    conj = L.pow(conj, L.p());
  }
  out.trace = tr;
  Elem nm = L.from_int(1);
  conj = x;
  for (unsigned i = 0; i < ctx.r; ++i) {
    nm = L.mul(nm, conj);
    conj = L.pow(conj, static_cast<std::int64_t>(ctx.q));
  }
  out.norm = nm == 0 ? 0 : ctx.base->exp(L.log(nm) / ctx.lift);
  return out;
}

}  // namespace hgzeta::ff
