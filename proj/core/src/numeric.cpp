// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "hgzeta/numeric.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "hgzeta/errors.hpp"

namespace hgzeta {

const Real& pi() {
  static const Real value = boost::math::constants::pi<Real>();
  return value;
}

Complex& Complex::operator/=(const Complex& o) {
  Real d = o.norm();
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Real Complex::abs() const { return boost::multiprecision::sqrt(norm()); }

Complex unit_root(std::int64_t num, std::int64_t den) {
  num %= den;
  if (num < 0) num += den;
  if (num == 0) return Complex(1);
  if (2 * num == den) return Complex(-1);
  if (4 * num == den) return Complex(Real(0), Real(1));
  if (4 * num == 3 * den) return Complex(Real(0), Real(-1));
  Real t = 2 * pi() * num / den;
  return {boost::multiprecision::cos(t), boost::multiprecision::sin(t)};
}

Complex pow_int(Complex base, std::uint64_t e) {
  Complex acc(1);
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

Real pow_real(const Real& base, std::int64_t e) {
  Real acc = 1;
  Real b = base;
  bool inv = e < 0;
  std::uint64_t k = inv ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1) acc *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return inv ? Real(1) / acc : acc;
}

Real distance(const Complex& a, const Complex& b) { return (a - b).abs(); }

BigInt round_to_bigint(const Complex& v, const Real& gap, const char* what) {
  Real nearest = boost::multiprecision::round(v.re);
  Real off = boost::multiprecision::abs(v.re - nearest);
  if (off > gap || boost::multiprecision::abs(v.im) > gap) {
    throw RoundingGapError(std::string(what) + " is not integral: " + to_string(v, 30));
  }
  return nearest.convert_to<BigInt>();
}

std::int64_t round_to_int(const Complex& v, const Real& gap, const char* what) {
  BigInt b = round_to_bigint(v, gap, what);
  if (b > std::numeric_limits<std::int64_t>::max() || b < std::numeric_limits<std::int64_t>::min()) {
    throw RoundingGapError(std::string(what) + " overflows int64");
  }
  return b.convert_to<std::int64_t>();
}

Real real_from_bigint(const BigInt& v) { return Real(v.str()); }

std::string to_string(const Real& v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

std::string to_string(const Complex& v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v.re << (v.im < 0 ? " - " : " + ") << boost::multiprecision::abs(v.im)
     << "i";
  return os.str();
}

Real tenth_power(int e) { return pow_real(Real(10), -e); }

}  // namespace hgzeta
