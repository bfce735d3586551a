// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "hgzeta/padic.hpp"

#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "hgzeta/errors.hpp"

namespace hgzeta::padic {

namespace bmp = boost::multiprecision;

Ring::Ring(std::uint32_t p, unsigned f, unsigned m) : p_(p), f_(f), m_(m), pm_(1), Fq_(p, f) {
  if (m == 0) throw ConfigError("p-adic precision must be positive");
  for (unsigned i = 0; i < m; ++i) {
    if (pm_ > (std::int64_t{1} << 62) / p) throw ConfigError("p^m exceeds 62 bits");
    pm_ *= p;
  }
  for (auto d : Fq_.modulus()) h_.push_back(d);
  frob_x_ = zero();
  if (f_ == 1) return;
  // root of h~ congruent to x^p, by Newton iteration
  PadicElem x = zero();
  x.c[1] = 1;
  PadicElem y = pow(x, p);
  auto eval = [&](const std::vector<std::int64_t>& poly, const PadicElem& at) {
    PadicElem acc = zero();
    for (std::size_t i = poly.size(); i-- > 0;) acc = add(mul(acc, at), from_int(poly[i]));
    return acc;
  };
  std::vector<std::int64_t> dh;
  for (std::size_t i = 1; i < h_.size(); ++i) dh.push_back(h_[i] * static_cast<std::int64_t>(i));
  for (unsigned it = 0; it <= m_; ++it) y = sub(y, mul(eval(h_, y), inv(eval(dh, y))));
  frob_x_ = y;
}

PadicElem Ring::zero() const { return PadicElem{std::vector<std::int64_t>(f_, 0)}; }

PadicElem Ring::from_int(std::int64_t v) const {
  PadicElem out = zero();
  out.c[0] = norm(v);
  return out;
}

PadicElem Ring::from_bigint(const BigInt& v) const {
  BigInt r = v % pm_;
  if (r < 0) r += pm_;
  return from_int(r.convert_to<std::int64_t>());
}

PadicElem Ring::add(const PadicElem& a, const PadicElem& b) const {
  PadicElem out = zero();
  for (unsigned i = 0; i < f_; ++i) out.c[i] = norm(a.c[i] + b.c[i]);
  return out;
}

PadicElem Ring::sub(const PadicElem& a, const PadicElem& b) const {
  PadicElem out = zero();
  for (unsigned i = 0; i < f_; ++i) out.c[i] = norm(a.c[i] - b.c[i]);
  return out;
}

PadicElem Ring::neg(const PadicElem& a) const { return sub(zero(), a); }

PadicElem Ring::mul(const PadicElem& a, const PadicElem& b) const {
  if (f_ == 1) return PadicElem{{mulmod(a.c[0], b.c[0])}};
  std::vector<std::int64_t> prod(2 * f_ - 1, 0);
  for (unsigned i = 0; i < f_; ++i)
    for (unsigned j = 0; j < f_; ++j) prod[i + j] = norm(prod[i + j] + mulmod(a.c[i], b.c[j]));
  for (std::size_t k = prod.size(); k-- > f_;) {
    std::int64_t lead = prod[k];
    if (lead == 0) continue;
    for (unsigned i = 0; i < f_; ++i) prod[k - f_ + i] = norm(prod[k - f_ + i] - mulmod(lead, h_[i]));
    prod[k] = 0;
  }
  prod.resize(f_);
  return PadicElem{prod};
}

PadicElem Ring::scale(const PadicElem& a, std::int64_t s) const {
  PadicElem out = zero();
  s = norm(s);
  for (unsigned i = 0; i < f_; ++i) out.c[i] = mulmod(a.c[i], s);
  return out;
}

PadicElem Ring::pow(PadicElem a, BigInt e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  PadicElem acc = one();
  while (e > 0) {
    if (bmp::bit_test(e, 0)) acc = mul(acc, a);
    e >>= 1;
    if (e > 0) a = mul(a, a);
  }
  return acc;
}

std::int64_t Ring::inv_int(std::int64_t a) const {
  std::int64_t g = pm_, x = 0, x1 = 1, b = norm(a);
  std::int64_t r = b;
  g = pm_;
  while (r != 0) {
    std::int64_t qt = g / r;
    std::int64_t t = g - qt * r;
    g = r;
    r = t;
    t = x - qt * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw ZeroInput("not a unit modulo p^m");
  return norm(x);
}

PadicElem Ring::inv(const PadicElem& a) const {
  ff::Elem r = reduce(a);
  if (r == 0) throw ZeroInput("not a p-adic unit: " + str(a));
  if (f_ == 1) return from_int(inv_int(a.c[0]));
  PadicElem v = lift(Fq_.inv(r));
  const PadicElem two = from_int(2);
  for (unsigned prec = 1; prec < m_; prec *= 2) v = mul(v, sub(two, mul(a, v)));
  return v;
}

unsigned Ring::valuation(const PadicElem& a) const {
  unsigned best = m_;
  for (auto v : a.c) {
    if (v == 0) continue;
    unsigned k = 0;
    while (v % p_ == 0) {
      v /= p_;
      ++k;
    }
    best = std::min(best, k);
  }
  return best;
}

PadicElem Ring::sigma(const PadicElem& a, unsigned times) const {
  if (f_ == 1) return a;
  PadicElem out = a;
  for (unsigned t = 0; t < times; ++t) {
    PadicElem acc = zero();
    for (unsigned i = f_; i-- > 0;) acc = add(mul(acc, frob_x_), from_int(out.c[i]));
    out = acc;
  }
  return out;
}

ff::Elem Ring::reduce(const PadicElem& a) const {
  std::vector<std::uint32_t> d;
  for (auto v : a.c) d.push_back(static_cast<std::uint32_t>(v % p_));
  return Fq_.from_digits(d);
}

PadicElem Ring::lift(ff::Elem code) const {
  PadicElem out = zero();
  std::vector<std::uint32_t> d = Fq_.digits(code);
  for (unsigned i = 0; i < f_ && i < d.size(); ++i) out.c[i] = d[i];
  return out;
}

PadicElem Ring::teichmuller(ff::Elem code) const {
  PadicElem w = lift(code);
  if (code == 0) return w;
  const BigInt q = BigInt(Fq_.size());
  for (unsigned i = 0; i < m_; ++i) w = pow(w, q);
  return w;
}

std::string Ring::str(const PadicElem& a) const {
  std::ostringstream os;
  if (f_ == 1) {
    os << a.c[0];
  } else {
    os << "(";
    for (unsigned i = 0; i < f_; ++i) os << (i ? "," : "") << a.c[i];
    os << ")";
  }
  os << " mod " << p_ << "^" << m_;
  return os.str();
}

PadicElem coefficient_product(const Ring& R, const fam::FamilySpec& spec) {
  PadicElem out = R.one();
  for (std::size_t i = 0; i < spec.vars(); ++i) out = R.mul(out, R.pow(R.teichmuller(spec.c[i]), spec.alpha.alphas[i]));
  return out;
}

namespace {

// p-adic unit part and valuation of a product of positive integers
struct UnitVal {
  std::int64_t unit = 1;
  std::int64_t val = 0;
};

void absorb(const Ring& R, UnitVal& acc, std::int64_t v) {
  const std::int64_t p = R.p();
  while (v % p == 0) {
    v /= p;
    ++acc.val;
  }
  acc.unit = R.mulmod(acc.unit, v % R.modulus());
}

}  // namespace

PadicElem eval_F_trunc(const Ring& R, const fam::FamilySpec& spec, const PadicElem& x, unsigned s) {
  std::uint64_t terms = 1;
  for (unsigned i = 0; i < s; ++i) {
    if (terms > kTermBudget / R.p()) throw BudgetExceeded("p^" + std::to_string(s) + " series terms exceed the budget");
    terms *= R.p();
  }
  const auto& alphas = spec.alpha.alphas;
  const std::int64_t alpha = spec.alpha.alpha_total;
  const PadicElem z = R.mul(coefficient_product(R, spec), x);
  UnitVal num, den;
  PadicElem zk = R.one();
  PadicElem sum = R.zero();
  const auto m = static_cast<std::int64_t>(R.precision());
  for (std::uint64_t k = 0; k < terms; ++k) {
    if (k > 0) {
      const auto km = static_cast<std::int64_t>(k - 1);
      for (std::int64_t j = 1; j <= alpha; ++j) absorb(R, num, km * alpha + j);
      for (auto ai : alphas)
        for (std::int64_t j = 1; j <= ai; ++j) absorb(R, den, km * ai + j);
      zk = R.mul(zk, z);
    }
    std::int64_t v = num.val - den.val;
    if (v < 0) throw PrecisionLoss("negative valuation in coefficient " + std::to_string(k));
    if (v >= m) continue;
    std::int64_t coef = R.mulmod(num.unit, R.inv_int(den.unit));
    for (std::int64_t i = 0; i < v; ++i) coef = R.mulmod(coef, R.p());
    sum = R.add(sum, R.scale(zk, coef));
  }
  return sum;
}

ff::Elem criterion_residue(const fam::FamilySpec& spec, ff::Elem lambda) {
  Ring R(spec.p, spec.f, 1);
  const ff::FiniteField& F = R.residue_field();
  if (lambda == 0) throw ZeroInput("lambda = 0");
  ff::Elem x = F.inv(F.pow(lambda, spec.alpha.alpha_total));
  return R.reduce(eval_F_trunc(R, spec, R.lift(x), 1));
}

UnitRootReport unit_root(const fam::FamilySpec& spec, ff::Elem lambda, unsigned m) {
  UnitRootReport out;
  out.residue = criterion_residue(spec, lambda);
  if (out.residue == 0) return out;
  std::uint64_t terms = 1;
  for (unsigned i = 0; i <= m; ++i) {
    if (terms > kTermBudget / spec.p) {
      throw BudgetExceeded("unit root to precision p^" + std::to_string(m) + " needs more than " +
                           std::to_string(kTermBudget) + " series terms");
    }
    terms *= spec.p;
  }
  Ring R(spec.p, spec.f, m);
  const ff::FiniteField& F = R.residue_field();
  const PadicElem x = R.teichmuller(F.inv(F.pow(lambda, spec.alpha.alpha_total)));
  // F_{1,s+1}(x) / sigma(F_{1,s}(x)) is f(x) mod p^{s+1}
  std::vector<PadicElem> partial;
  for (unsigned s = m - 1; s <= m + 1; ++s) partial.push_back(eval_F_trunc(R, spec, x, s));
  PadicElem ratio_a = R.mul(partial[1], R.inv(R.sigma(partial[0])));
  PadicElem ratio_b = R.mul(partial[2], R.inv(R.sigma(partial[1])));
  if (!(ratio_a == ratio_b)) {
    throw StabilizationError("truncation ratios differ mod p^m: " + R.str(ratio_a) + " vs " + R.str(ratio_b));
  }
  out.f_value = ratio_b;
  PadicElem value = R.one();
  for (unsigned i = 0; i < spec.f; ++i) value = R.mul(value, R.sigma(ratio_b, i));
  out.value = value;
  return out;
}

FglPair fgl_log_coefficient(const Ring& R, const fam::FamilySpec& spec, const PadicElem& Lambda, std::uint64_t m) {
  const auto& alphas = spec.alpha.alphas;
  const std::int64_t alpha = spec.alpha.alpha_total;
  const auto mm = static_cast<std::int64_t>(m);
  const PadicElem cc = coefficient_product(R, spec);
  const PadicElem minus_lambda = R.neg(Lambda);
  auto factorial = [](std::int64_t v) {
    BigInt out = 1;
    for (std::int64_t i = 2; i <= v; ++i) out *= i;
    return out;
  };
  FglPair out{R.zero(), R.zero()};
  for (std::int64_t k = 0; k * alpha <= mm; ++k) {
    BigInt den = factorial(mm - k * alpha);
    for (auto ai : alphas) den *= factorial(k * ai);
    BigInt multinom = factorial(mm) / den;
    PadicElem mono = R.mul(R.pow(cc, k), R.pow(minus_lambda, mm - k * alpha));
    out.multinomial = R.add(out.multinomial, R.mul(R.from_bigint(multinom), mono));
  }
  // (-Lambda)^m sum_k prod_b ((-m+b)/alpha)_k / prod_i prod_b (b/alpha_i)_k * (alpha^alpha/prod alpha_i^alpha_i)^k
  //   * (cc Lambda^{-alpha})^k, with the Pochhammer products over Q
  bmp::cpp_rational coef = 1;
  bmp::cpp_rational ratio = bmp::pow(BigInt(alpha), static_cast<unsigned>(alpha));
  for (auto ai : alphas) ratio /= bmp::pow(BigInt(ai), static_cast<unsigned>(ai));
  for (std::int64_t k = 0;; ++k) {
    if (coef == 0) break;
    if (bmp::denominator(coef) != 1) throw PrecisionLoss("non-integral hypergeometric term at k = " + std::to_string(k));
    // (-Lambda)^m Lambda^{-k alpha} = (-1)^{k alpha} (-Lambda)^{m - k alpha}
    BigInt integral = bmp::numerator(coef);
    if ((k * alpha) % 2 == 1) integral = -integral;
    PadicElem mono = R.mul(R.pow(cc, k), R.pow(minus_lambda, mm - k * alpha));
    out.hypergeometric = R.add(out.hypergeometric, R.mul(R.from_bigint(integral), mono));
    bmp::cpp_rational next = ratio;
    for (std::int64_t b = 0; b < alpha; ++b) next *= bmp::cpp_rational(-mm + b, alpha) + k;
    for (auto ai : alphas)
      for (std::int64_t b = 1; b <= ai; ++b) next /= bmp::cpp_rational(b, ai) + k;
    coef *= next;
  }
  return out;
}

bool height_one_test(const Ring& R, const PadicElem& a1) { return R.is_unit(a1); }

std::size_t unit_reciprocal_roots(const std::vector<BigInt>& P, std::uint32_t p) {
  std::size_t last = 0;
  for (std::size_t k = 0; k < P.size(); ++k)
    if (P[k] % p != 0) last = k;
  return last;
}

PadicElem eval_at_inverse(const Ring& R, const std::vector<BigInt>& P, const PadicElem& gamma) {
  const PadicElem g = R.inv(gamma);
  PadicElem acc = R.zero();
  for (std::size_t k = P.size(); k-- > 0;) acc = R.add(R.mul(acc, g), R.from_bigint(P[k]));
  return acc;
}

}  // namespace hgzeta::padic
