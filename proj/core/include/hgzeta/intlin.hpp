// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hgzeta/numeric.hpp"

namespace hgzeta::intlin {

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::int64_t at64(std::size_t i, std::size_t j) const;

  IntMatrix transpose() const;
  IntMatrix select_columns(const std::vector<std::size_t>& cols) const;
  IntMatrix select_rows(const std::vector<std::size_t>& rows) const;
  IntMatrix with_ones_row() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string str() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

BigInt determinant(const IntMatrix& m);

struct SnfResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  // length min(rows, cols): nonzero divisors first, then zeros
  std::vector<BigInt> divisors;

  std::size_t rank() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

struct AlphaData {
  std::vector<std::int64_t> alphas;
  std::int64_t alpha_total = 0;
};

IntMatrix aprime_of(const IntMatrix& a);
AlphaData alpha_vector(const IntMatrix& aprime);

// Visits every k in (Z/modulus)^cols with m k = 0 mod modulus.
void for_each_kernel_vector(const IntMatrix& m, std::int64_t modulus,
                            const std::function<void(const std::vector<std::int64_t>&)>& visit);
std::vector<std::vector<std::int64_t>> kernel_mod(const IntMatrix& m, std::int64_t modulus);
BigInt kernel_size_mod(const IntMatrix& m, std::int64_t modulus);

struct KernelReps {
  std::int64_t modulus = 0;  // q - 1
  std::vector<std::vector<std::int64_t>> s;
  std::vector<std::vector<std::int64_t>> t_ij;
  std::vector<std::int64_t> t;
  std::vector<bool> delta;
};

KernelReps kernel_reps(const IntMatrix& a, std::int64_t q, const AlphaData& alpha);

// Columns i of A with a_ji = 0 for every j outside J.
std::vector<std::size_t> columns_supported_in(const IntMatrix& a, const std::vector<std::size_t>& subset);

// Rows J of the supported columns with a ones row appended.
IntMatrix restricted_matrix(const IntMatrix& a, const std::vector<std::size_t>& subset);

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k);

struct Asm2Entry {
  std::vector<std::size_t> subset;
  std::vector<std::size_t> columns;
  IntMatrix matrix;
  std::vector<BigInt> divisors;
  bool pass = true;
};

struct Asm2Report {
  std::vector<Asm2Entry> entries;
  bool pass = true;
};

Asm2Report check_asm2(const IntMatrix& a, std::int64_t q);

// Asm1 (divisibility of the kernel representatives) together with Asm2.
struct AssumptionVerdict {
  bool asm1 = true;
  std::string asm1_detail;
  Asm2Report asm2;
  bool pass() const { return asm1 && asm2.pass; }
};

AssumptionVerdict check_assumptions(const IntMatrix& a, std::int64_t q, const AlphaData& alpha);

struct DCount {
  std::int64_t value = 0;
  std::vector<std::vector<std::size_t>> subsets;
  // half-size J with a nonzero entry outside J in every row; reported when it differs
  std::int64_t literal_reading = 0;
};

DCount compute_D(const IntMatrix& a);

std::string format_subset(const std::vector<std::size_t>& subset);

}  // namespace hgzeta::intlin
