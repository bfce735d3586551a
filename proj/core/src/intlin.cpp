// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "hgzeta/intlin.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hgzeta/errors.hpp"

namespace hgzeta::intlin {

namespace {

BigInt babs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

std::int64_t mod64(const BigInt& v, std::int64_t m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return r.convert_to<std::int64_t>();
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst += f * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw ConfigError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::int64_t IntMatrix::at64(std::size_t i, std::size_t j) const {
  return (*this)(i, j).convert_to<std::int64_t>();
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  IntMatrix m(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(i, cols[j]);
  return m;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& rows) const {
  IntMatrix m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(rows[i], j);
  return m;
}

IntMatrix IntMatrix::with_ones_row() const {
  IntMatrix m(rows_ + 1, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t j = 0; j < cols_; ++j) m(rows_, j) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t SnfResult::rank() const {
  return static_cast<std::size_t>(std::count_if(divisors.begin(), divisors.end(), [](const BigInt& d) { return d != 0; }));
}

SnfResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SnfResult out{IntMatrix::identity(rows), m, IntMatrix::identity(cols), {}};
  IntMatrix& U = out.U;
  IntMatrix& D = out.D;
  IntMatrix& V = out.V;
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      BigInt best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (D(i, j) != 0 && (best == 0 || babs(D(i, j)) < best)) {
            best = babs(D(i, j));
            pi = i;
            pj = j;
          }
      if (best == 0) break;
      swap_rows(D, t, pi);
      swap_rows(U, t, pi);
      swap_cols(D, t, pj);
      swap_cols(V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        BigInt f = -(D(i, t) / D(t, t));
        add_row(D, i, t, f);
        add_row(U, i, t, f);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        BigInt f = -(D(t, j) / D(t, t));
        add_col(D, j, t, f);
        add_col(V, j, t, f);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            add_row(D, t, i, 1);
            add_row(U, t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < rows; ++j) U(t, j) = -U(t, j);
    }
  }
  out.divisors.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) out.divisors.push_back(D(t, t));
  return out;
}

IntMatrix aprime_of(const IntMatrix& a) {
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= 1;
  return m;
}

AlphaData alpha_vector(const IntMatrix& aprime) {
  SnfResult snf = smith_normal_form(aprime);
  std::size_t rank = snf.rank();
  if (aprime.cols() != rank + 1) {
    throw KernelRankError("kernel of A' has rank " + std::to_string(aprime.cols() - rank) + ", expected 1");
  }
  std::vector<BigInt> v(aprime.cols());
  BigInt g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = snf.V(i, rank);
    g = boost::multiprecision::gcd(g, v[i]);
  }
  BigInt total = 0;
  for (auto& x : v) {
    x /= g;
    total += x;
  }
  if (total < 0) {
    for (auto& x : v) x = -x;
    total = -total;
  }
  AlphaData out;
  for (const auto& x : v) {
    if (x <= 0) throw KernelRankError("kernel generator of A' is not positive");
    out.alphas.push_back(x.convert_to<std::int64_t>());
  }
  out.alpha_total = total.convert_to<std::int64_t>();
  return out;
}

void for_each_kernel_vector(const IntMatrix& m, std::int64_t modulus,
                            const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  const std::size_t cols = m.cols();
  std::vector<std::int64_t> step(cols), count(cols);
  std::vector<std::vector<std::int64_t>> v(cols, std::vector<std::int64_t>(cols));
  if (m.rows() == 0 || m.is_zero()) {
    for (std::size_t i = 0; i < cols; ++i) {
      step[i] = 1;
      count[i] = modulus;
      v[i][i] = 1 % modulus;
    }
  } else {
    SnfResult snf = smith_normal_form(m);
    for (std::size_t i = 0; i < cols; ++i) {
      std::int64_t g = modulus;
      if (i < snf.divisors.size() && snf.divisors[i] != 0) g = std::gcd(mod64(snf.divisors[i], modulus), modulus);
      if (g == 0) g = modulus;
      step[i] = modulus / g;
      count[i] = g;
      for (std::size_t r = 0; r < cols; ++r) v[r][i] = mod64(snf.V(r, i), modulus);
    }
  }
  std::vector<std::int64_t> idx(cols, 0), k(cols, 0);
  auto mulmod = [modulus](std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % modulus);
  };
  for (;;) {
    for (std::size_t r = 0; r < cols; ++r) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < cols; ++i) {
        if (idx[i] == 0) continue;
        acc += mulmod(v[r][i], mulmod(idx[i], step[i]));
        if (acc >= modulus) acc -= modulus;
      }
      k[r] = acc;
    }
    visit(k);
    std::size_t i = 0;
    while (i < cols && ++idx[i] == count[i]) idx[i++] = 0;
    if (i == cols) break;
  }
}

std::vector<std::vector<std::int64_t>> kernel_mod(const IntMatrix& m, std::int64_t modulus) {
  std::vector<std::vector<std::int64_t>> out;
  for_each_kernel_vector(m, modulus, [&](const std::vector<std::int64_t>& k) { out.push_back(k); });
  std::sort(out.begin(), out.end());
  return out;
}

BigInt kernel_size_mod(const IntMatrix& m, std::int64_t modulus) {
  if (m.rows() == 0 || m.is_zero()) return boost::multiprecision::pow(BigInt(modulus), static_cast<unsigned>(m.cols()));
  SnfResult snf = smith_normal_form(m);
  BigInt size = 1;
  for (std::size_t i = 0; i < m.cols(); ++i) {
    if (i < snf.divisors.size() && snf.divisors[i] != 0)
      size *= std::gcd(mod64(snf.divisors[i], modulus), modulus) == 0 ? modulus
                                                                        : std::gcd(mod64(snf.divisors[i], modulus), modulus);
    else
      size *= modulus;
  }
  return size;
}

KernelReps kernel_reps(const IntMatrix& a, std::int64_t q, const AlphaData& alpha) {
  const std::int64_t modulus = q - 1;
  const std::size_t n1 = a.cols();
  std::vector<std::vector<std::int64_t>> ker = kernel_mod(aprime_of(a), modulus);
  std::set<std::vector<std::int64_t>> seen;
  KernelReps out;
  out.modulus = modulus;
  for (const auto& k : ker) {
    if (seen.count(k)) continue;
    out.s.push_back(k);
    std::vector<std::int64_t> v = k;
    for (std::int64_t step = 0; step < modulus; ++step) {
      seen.insert(v);
      for (std::size_t i = 0; i < n1; ++i) v[i] = (v[i] + alpha.alphas[i]) % modulus;
    }
  }
  std::ostringstream bad;
  for (std::size_t j = 0; j < out.s.size(); ++j) {
    const auto& s = out.s[j];
    std::vector<std::int64_t> tij(n1);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n1; ++i) {
      total += s[i];
      if (s[i] % alpha.alphas[i] != 0) bad << " (i=" << i + 1 << ",j=" << j << ")";
      tij[i] = s[i] / alpha.alphas[i];
    }
    if (total % alpha.alpha_total != 0) bad << " (|s_" << j << "|)";
    out.t_ij.push_back(tij);
    out.t.push_back(total / alpha.alpha_total);
    out.delta.push_back(total % modulus == 0);
  }
  if (!bad.str().empty()) throw Asm1Violation("divisibility fails at" + bad.str());
  return out;
}

std::vector<std::size_t> columns_supported_in(const IntMatrix& a, const std::vector<std::size_t>& subset) {
  std::vector<bool> in(a.rows(), false);
  for (auto j : subset) in[j] = true;
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    bool inside = true;
    for (std::size_t j = 0; j < a.rows(); ++j)
      if (!in[j] && a(j, i) != 0) inside = false;
    if (inside) cols.push_back(i);
  }
  return cols;
}

IntMatrix restricted_matrix(const IntMatrix& a, const std::vector<std::size_t>& subset) {
  return a.select_rows(subset).select_columns(columns_supported_in(a, subset)).with_ones_row();
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Asm2Report check_asm2(const IntMatrix& a, std::int64_t q) {
  Asm2Report report;
  const std::size_t n1 = a.rows();
  for (std::size_t t = (n1 + 1) / 2; t <= n1; ++t) {
    for (const auto& subset : subsets_of_size(n1, t)) {
      Asm2Entry e;
      e.subset = subset;
      e.columns = columns_supported_in(a, subset);
      e.matrix = a.select_rows(subset).select_columns(e.columns).with_ones_row();
      if (!e.columns.empty()) {
        SnfResult snf = smith_normal_form(e.matrix);
        e.divisors = snf.divisors;
        for (const auto& d : e.divisors)
          if (d != 0 && BigInt(q - 1) % d != 0) e.pass = false;
      }
      report.pass = report.pass && e.pass;
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

AssumptionVerdict check_assumptions(const IntMatrix& a, std::int64_t q, const AlphaData& alpha) {
  AssumptionVerdict v;
  v.asm2 = check_asm2(a, q);
  try {
    kernel_reps(a, q, alpha);
  } catch (const Asm1Violation& e) {
    v.asm1 = false;
    v.asm1_detail = e.what();
  }
  return v;
}

DCount compute_D(const IntMatrix& a) {
  DCount out;
  const std::size_t n1 = a.rows();
  if (n1 % 2 == 1) return out;
  for (const auto& subset : subsets_of_size(n1, n1 / 2)) {
    if (columns_supported_in(a, subset).empty()) {
      ++out.value;
      out.subsets.push_back(subset);
    }
    std::vector<bool> in(n1, false);
    for (auto j : subset) in[j] = true;
    bool literal = true;
    for (std::size_t i = 0; i < n1; ++i) {
      bool found = false;
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (!in[j] && a(i, j) >= 1) found = true;
      literal = literal && found;
    }
    if (literal) ++out.literal_reading;
  }
  return out;
}

std::string format_subset(const std::vector<std::size_t>& subset) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i] + 1;
  os << '}';
  return os.str();
}

}  // namespace hgzeta::intlin
