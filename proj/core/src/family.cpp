// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "hgzeta/family.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hgzeta/errors.hpp"
#include "hgzeta/points.hpp"

namespace hgzeta::fam {

namespace {

bool in_normal_form(const intlin::IntMatrix& A) {
  const std::size_t m = A.rows();
  const auto n = static_cast<std::int64_t>(m) - 1;
  for (std::size_t i = 0; i < m; ++i) {
    int ones = 0;
    for (std::size_t j = 0; j < m; ++j) {
      std::int64_t v = A.at64(i, j);
      if (i == j) {
        if (v != n && v != n + 1) return false;
      } else if (v == 1) {
        ++ones;
      } else if (v != 0) {
        return false;
      }
    }
    if (ones > 1) return false;
  }
  return true;
}

}  // namespace

std::vector<std::size_t> normalize_columns(const intlin::IntMatrix& A) {
  std::vector<std::size_t> perm(A.cols());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (in_normal_form(A.select_columns(perm))) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw NotNormalizable("no monomial order puts " + A.str() + " in diagonal form; X_0 is singular");
}

ff::Elem compute_C(const ff::FiniteField& Fq, const std::vector<ff::Elem>& c, const intlin::AlphaData& alpha) {
  ff::Elem value = Fq.pow(Fq.from_int(alpha.alpha_total), alpha.alpha_total);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::int64_t a = alpha.alphas[i];
    value = Fq.mul(value, Fq.div(Fq.pow(c[i], a), Fq.pow(Fq.from_int(a), a)));
  }
  return value;
}

FamilySpec make_family(std::uint32_t p, unsigned f, const intlin::IntMatrix& A, const std::vector<ff::Elem>& c) {
  if (!ff::is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (A.rows() != A.cols() || A.rows() < 3) throw ConfigError("A must be square of size n+1 >= 3");
  const std::size_t m = A.rows();
  if (c.size() != m) throw ConfigError("c must have n+1 entries");
  FamilySpec spec;
  spec.p = p;
  spec.f = f;
  spec.q = 1;
  for (unsigned i = 0; i < f; ++i) spec.q *= p;
  spec.n = static_cast<int>(m) - 1;
  for (std::size_t i = 0; i < m; ++i) {
    BigInt sum = 0;
    bool all_ones = true;
    for (std::size_t j = 0; j < m; ++j) {
      if (A(j, i) < 0) throw ConfigError("negative exponent in A");
      sum += A(j, i);
      all_ones = all_ones && A(j, i) == 1;
    }
    if (sum != static_cast<std::int64_t>(m)) throw ConfigError("column " + std::to_string(i + 1) + " of A does not have degree n+1");
    if (all_ones) throw ConfigError("column " + std::to_string(i + 1) + " of A is the deformation monomial");
  }
  for (ff::Elem ci : c)
    if (ci == 0 || ci >= spec.q) throw ConfigError("coefficients c_i must be nonzero elements of F_q");

  spec.permutation = normalize_columns(A);
  spec.A = A.select_columns(spec.permutation);
  for (auto idx : spec.permutation) spec.c.push_back(c[idx]);
  spec.alpha = intlin::alpha_vector(intlin::aprime_of(spec.A));
  std::ostringstream bad;
  for (std::size_t i = 0; i < m; ++i)
    if (spec.alpha.alphas[i] % p == 0) bad << " alpha_" << i + 1 << "=" << spec.alpha.alphas[i];
  if (spec.alpha.alpha_total % p == 0) bad << " alpha=" << spec.alpha.alpha_total;
  if (!bad.str().empty()) throw AssumptionViolation("p = " + std::to_string(p) + " divides" + bad.str());
  ff::FiniteField Fq(p, f);
  spec.C = compute_C(Fq, spec.c, spec.alpha);
  return spec;
}

ff::Elem hypergeometric_argument(const ff::FiniteField& Fq, const FamilySpec& spec, ff::Elem lambda) {
  if (lambda == 0) throw ZeroInput("lambda = 0 has no hypergeometric argument");
  return Fq.div(spec.C, Fq.pow(lambda, spec.alpha.alpha_total));
}

bool is_degenerate(const ff::FiniteField& Fq, const FamilySpec& spec, ff::Elem lambda) {
  return Fq.pow(lambda, spec.alpha.alpha_total) == spec.C;
}

std::string SmoothnessVerdict::str() const {
  std::ostringstream os;
  if (singular) {
    os << "SingularAt([";
    for (std::size_t i = 0; i < point.size(); ++i) os << (i ? ":" : "") << point[i];
    os << "], " << level << ")";
  } else {
    os << "NoSingularFound(" << searched_up_to << ")";
  }
  return os.str();
}

SmoothnessVerdict smoothness_scan(const FamilySpec& spec, ff::Elem lambda, unsigned r_bound, std::uint64_t point_budget,
                                  unsigned threads) {
  SmoothnessVerdict verdict;
  const std::size_t m = spec.vars();
  std::uint64_t spent = 0;
  for (unsigned s = 1; s <= r_bound; ++s) {
    auto field = ff::build_field(spec.p, spec.f, s);
    const ff::FiniteField& F = *field->level;
    std::uint64_t points = pts::projective_size(F.size(), m, point_budget);
    if (points == 0 || spent + points > point_budget) break;
    spent += points;

    std::vector<pts::Term> terms;
    for (std::size_t i = 0; i < m; ++i) {
      pts::Term t{field->embed(spec.c[i]), std::vector<std::uint32_t>(m)};
      for (std::size_t j = 0; j < m; ++j) t.exps[j] = static_cast<std::uint32_t>(spec.A.at64(j, i));
      terms.push_back(t);
    }
    terms.push_back(pts::Term{F.neg(field->embed(lambda)), std::vector<std::uint32_t>(m, 1)});
    pts::Polynomial poly(F, terms);
    std::vector<pts::Polynomial> partials;
    for (std::size_t k = 0; k < m; ++k) partials.push_back(poly.derivative(k));

    std::atomic<bool> found{false};
    std::mutex mu;
    pts::for_each_projective_point(
        F, m, threads,
        [&](const std::vector<ff::Elem>& x, unsigned) {
          std::vector<std::uint32_t> logs(m);
          std::vector<char> zero(m);
          for (std::size_t j = 0; j < m; ++j) {
            zero[j] = x[j] == 0;
            if (!zero[j]) logs[j] = F.log(x[j]);
          }
          for (const auto& d : partials)
            if (d.eval(logs, zero) != 0) return;
          if (poly.eval(logs, zero) != 0) return;
          std::lock_guard<std::mutex> lock(mu);
          if (!found.exchange(true)) {
            verdict.point = x;
            verdict.level = s;
          }
        },
        [&] { return found.load(); });
    if (found) {
      verdict.singular = true;
      return verdict;
    }
    verdict.searched_up_to = s;
  }
  return verdict;
}

}  // namespace hgzeta::fam
