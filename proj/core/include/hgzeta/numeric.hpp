// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace hgzeta {

// 257-bit working precision, fixed at compile time.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<77, boost::multiprecision::allocate_stack>,
    boost::multiprecision::et_off>;

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kWorkingBits = 257;

const Real& pi();

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(const Real& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(long long r) : re(r), im(0) {}    // NOLINT(google-explicit-constructor)
  Complex(const Real& r, const Real& i) : re(r), im(i) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Complex& o);
  Complex& operator/=(const Real& s) {
    re /= s;
    im /= s;
    return *this;
  }

  Complex conj() const { return {re, -im}; }
  Real norm() const { return re * re + im * im; }
  Real abs() const;

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const Real& s) { return a *= s; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator/(Complex a, const Real& s) { return a /= s; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
};

using AlgValue = Complex;

// e^{2 pi i num / den}
Complex unit_root(std::int64_t num, std::int64_t den);

Complex pow_int(Complex base, std::uint64_t e);

Real pow_real(const Real& base, std::int64_t e);

// |a - b|
Real distance(const Complex& a, const Complex& b);

// Nearest integer to a value that must be integral; throws RoundingGapError
// when the real part is farther than gap from an integer or the imaginary
// part exceeds gap.
std::int64_t round_to_int(const Complex& v, const Real& gap, const char* what);
BigInt round_to_bigint(const Complex& v, const Real& gap, const char* what);

Real real_from_bigint(const BigInt& v);

std::string to_string(const Real& v, int digits = 20);
std::string to_string(const Complex& v, int digits = 20);

// 10^-e as a Real.
Real tenth_power(int e);

}  // namespace hgzeta
