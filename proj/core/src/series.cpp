// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "hgzeta/series.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace hgzeta::ser {

namespace bmp = boost::multiprecision;

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly series_mul(const Poly& a, const Poly& b, std::size_t n) {
  Poly out(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly series_inv(const Poly& a, std::size_t n) {
  Poly out(n);
  if (n == 0) return out;
  Complex inv0 = Complex(1) / a.at(0);
  out[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Complex acc;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * out[k - j];
    out[k] = -(acc * inv0);
  }
  return out;
}

Poly series_pow(const Poly& a, std::int64_t e, std::size_t n) {
  Poly base = e < 0 ? series_inv(a, n) : a;
  base.resize(n);
  Poly acc(n);
  if (n) acc[0] = Complex(1);
  for (std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e); k; k >>= 1) {
    if (k & 1) acc = series_mul(acc, base, n);
    if (k > 1) base = series_mul(base, base, n);
  }
  return acc;
}

Poly zeta_exp(const std::vector<Complex>& f) {
  const std::size_t R = f.size();
  Poly z(R + 1);
  z[0] = Complex(1);
  for (std::size_t k = 1; k <= R; ++k) {
    Complex acc;
    for (std::size_t j = 1; j <= k; ++j) acc -= f[j - 1] * z[k - j];
    z[k] = acc / Real(static_cast<std::int64_t>(k));
  }
  return z;
}

std::vector<Complex> roots(const Poly& p) {
  std::size_t deg = p.size();
  while (deg > 0 && p[deg - 1].norm() == 0) --deg;
  if (deg <= 1) return {};
  deg -= 1;
  Poly monic(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) monic[i] = p[i] / p[deg];

  Real bound = 0;
  for (std::size_t i = 0; i < deg; ++i) bound = std::max<Real>(bound, monic[i].abs());
  bound += 1;
  std::vector<Complex> z(deg);
  for (std::size_t k = 0; k < deg; ++k) {
    Complex w = unit_root(static_cast<std::int64_t>(4 * k + 1), static_cast<std::int64_t>(4 * deg));
    z[k] = w * (bound * Real(0.5) + Real(0.1));
  }
  const Real eps = pow_real(Real(2), -(kWorkingBits - 24));
  for (int iter = 0; iter < 4000; ++iter) {
    Real worst = 0;
    for (std::size_t k = 0; k < deg; ++k) {
      Complex val = monic[deg], der;
      for (std::size_t i = deg; i-- > 0;) {
        der = der * z[k] + val;
        val = val * z[k] + monic[i];
      }
      if (val.norm() == 0) continue;
      Complex ratio = val / der;
      Complex repulse;
      for (std::size_t j = 0; j < deg; ++j)
        if (j != k) repulse += Complex(1) / (z[k] - z[j]);
      Complex step = ratio / (Complex(1) - ratio * repulse);
      z[k] -= step;
      worst = std::max<Real>(worst, step.abs() / (z[k].abs() + 1));
    }
    if (worst < eps) break;
  }
  return z;
}

std::vector<Complex> solve(std::vector<std::vector<Complex>> m, std::vector<Complex> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (m[r][col].norm() > m[piv][col].norm()) piv = r;
    if (m[piv][col].norm() == 0) return {};
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      Complex factor = m[r][col] / m[col][col];
      if (factor.norm() == 0) continue;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<Complex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex acc = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= m[i][c] * x[c];
    x[i] = acc / m[i][i];
  }
  return x;
}

std::optional<Recurrence> fit_recurrence(const std::vector<Complex>& values, const Real& tol) {
  const std::size_t R = values.size();
  for (std::size_t L = 0; 2 * L <= R; ++L) {
    Recurrence rec;
    rec.order = L;
    rec.charpoly_rev.assign(L + 1, Complex());
    rec.charpoly_rev[0] = Complex(1);
    if (L > 0) {
      std::vector<std::vector<Complex>> m(L, std::vector<Complex>(L));
      std::vector<Complex> rhs(L);
      for (std::size_t e = 0; e < L; ++e) {
        for (std::size_t k = 1; k <= L; ++k) m[e][k - 1] = values[L + e - k];
        rhs[e] = -values[L + e];
      }
      std::vector<Complex> c = solve(m, rhs);
      if (c.empty()) continue;
      for (std::size_t k = 1; k <= L; ++k) rec.charpoly_rev[k] = c[k - 1];
    }
    bool ok = true;
    for (std::size_t r = L; r < R && ok; ++r) {
      Complex acc = values[r];
      Real scale = values[r].abs();
      for (std::size_t k = 1; k <= L; ++k) {
        Complex t = rec.charpoly_rev[k] * values[r - k];
        scale = std::max<Real>(scale, t.abs());
        acc += t;
      }
      Real rel = scale == 0 ? Real(0) : acc.abs() / scale;
      rec.residual = std::max<Real>(rec.residual, rel);
      ok = rel <= tol;
    }
    if (ok) return rec;
  }
  return std::nullopt;
}

std::vector<Complex> recurrence_roots(const Recurrence& rec) {
  // x^L + c_1 x^{L-1} + ... + c_L
  Poly p(rec.order + 1);
  for (std::size_t k = 0; k <= rec.order; ++k) p[rec.order - k] = rec.charpoly_rev[k];
  if (rec.order == 1) return {-p[0] / p[1]};
  return roots(p);
}

std::optional<std::vector<std::int64_t>> integer_weights(const std::vector<Complex>& values,
                                                         const std::vector<Complex>& betas, const Real& gap) {
  const std::size_t L = betas.size();
  if (values.size() < L) return std::nullopt;
  std::vector<std::vector<Complex>> m(L, std::vector<Complex>(L));
  std::vector<Complex> rhs(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(L));
  for (std::size_t k = 0; k < L; ++k) {
    Complex pw = betas[k];
    for (std::size_t r = 0; r < L; ++r) {
      m[r][k] = pw;
      pw *= betas[k];
    }
  }
  std::vector<Complex> w = solve(m, rhs);
  if (w.size() != L) return std::nullopt;
  std::vector<std::int64_t> out;
  for (const auto& v : w) {
    Real nearest = bmp::round(v.re);
    if (bmp::abs(v.re - nearest) > gap || bmp::abs(v.im) > gap) return std::nullopt;
    out.push_back(nearest.convert_to<std::int64_t>());
  }
  return out;
}

Real max_abs(const Poly& p) {
  Real m = 0;
  for (const auto& c : p) m = std::max<Real>(m, c.abs());
  return m;
}

namespace {

using Rational = bmp::cpp_rational;
using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly derivative(const QPoly& a) {
  QPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<long long>(i));
  trim(d);
  return d;
}

// quotient and remainder; b nonzero
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1);
  for (std::size_t k = a.size() - 1;; --k) {
    Rational c = a[k] / b.back();
    q[k - b.size() + 1] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k - b.size() + 1 + j] -= c * b[j];
    if (k == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly monic(QPoly a) {
  trim(a);
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::vector<BigInt> primitive(const QPoly& a) {
  BigInt den = 1;
  for (const auto& c : a) den = bmp::lcm(den, bmp::denominator(c));
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& c : a) {
    out.push_back(bmp::numerator(c) * (den / bmp::denominator(c)));
    g = bmp::gcd(g, out.back());
  }
  if (g != 0)
    for (auto& c : out) c /= g;
  return out;
}

}  // namespace

std::vector<std::pair<std::size_t, std::vector<BigInt>>> squarefree_decomposition(const std::vector<BigInt>& f) {
  QPoly a;
  for (const auto& c : f) a.push_back(Rational(c));
  trim(a);
  std::vector<std::pair<std::size_t, std::vector<BigInt>>> out;
  if (a.size() <= 1) return out;
  QPoly fp = derivative(a);
  QPoly a0 = gcd(a, fp);
  QPoly b = divmod(a, a0).first;
  QPoly c = divmod(fp, a0).first;
  QPoly d = sub(c, derivative(b));
  for (std::size_t m = 1; b.size() > 1; ++m) {
    QPoly g = gcd(b, d);
    if (g.size() > 1) out.emplace_back(m, primitive(g));
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = sub(c, derivative(b));
  }
  return out;
}

}  // namespace hgzeta::ser
