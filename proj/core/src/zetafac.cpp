// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "hgzeta/zetafac.hpp"

#include <algorithm>
#include <sstream>

#include "hgzeta/errors.hpp"

namespace hgzeta::zeta {

namespace bmp = boost::multiprecision;

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::int64_t divide_order(std::int64_t order, std::int64_t beta, const char* what) {
  if (order % beta != 0) {
    throw AssumptionViolation(std::string(what) + " = " + std::to_string(beta) + " does not divide q - 1 = " +
                              std::to_string(order));
  }
  return order / beta;
}

void check_lambda(const ff::FiniteField& Fq, const fam::FamilySpec& spec, ff::Elem lambda) {
  if (lambda == 0 || lambda >= spec.q) throw ConfigError("lambda must be a nonzero element of F_q");
  if (fam::is_degenerate(Fq, spec, lambda)) {
    throw ConfigError("lambda = " + std::to_string(lambda) + " satisfies lambda^alpha = C");
  }
}

void check_asm(const fam::FamilySpec& spec) {
  intlin::AssumptionVerdict v = intlin::check_assumptions(spec.A, static_cast<std::int64_t>(spec.q), spec.alpha);
  if (v.pass()) return;
  std::ostringstream os;
  os << "q = " << spec.q << ":";
  if (!v.asm1) os << " Asm1 (" << v.asm1_detail << ")";
  for (const auto& e : v.asm2.entries)
    if (!e.pass) os << " Asm2 fails on J = " << intlin::format_subset(e.subset);
  throw AssumptionViolation(os.str());
}

std::vector<SpectralPiece> pieces_from_reps(const fam::FamilySpec& spec, const ff::FiniteField& Fq, ff::Elem lambda,
                                            const intlin::KernelReps& reps) {
  const std::int64_t M = static_cast<std::int64_t>(spec.q) - 1;
  const std::size_t n1 = spec.vars();
  const auto& alphas = spec.alpha.alphas;
  const std::int64_t alpha = spec.alpha.alpha_total;
  const std::int64_t step = divide_order(M, alpha, "alpha");
  std::vector<std::int64_t> steps(n1);
  for (std::size_t i = 0; i < n1; ++i) steps[i] = divide_order(M, alphas[i], "alpha_i");
  const ff::Elem x = fam::hypergeometric_argument(Fq, spec, lambda);
  auto mod = [M](std::int64_t k) { return ((k % M) + M) % M; };

  std::vector<SpectralPiece> out;
  for (std::size_t j = 0; j < reps.s.size(); ++j) {
    SpectralPiece pc;
    pc.j = j;
    pc.s = reps.s[j];
    pc.t_ij = reps.t_ij[j];
    pc.t = reps.t[j];
    pc.delta = reps.delta[j];
    pc.x = x;
    pc.gamma.sign = spec.n % 2 == 0 ? 1 : -1;
    std::int64_t total = 0;
    int nonzero = 0;
    for (std::size_t i = 0; i < n1; ++i) {
      total += pc.s[i];
      if (pc.s[i] % M != 0) ++nonzero;
      pc.gamma.chars.push_back({mod(pc.s[i]), spec.c[i]});
    }
    pc.gamma_weight = nonzero + 1 - (pc.delta ? 1 : 0);
    pc.gamma.chars.push_back({mod(-total), Fq.neg(lambda)});
    for (std::size_t i = 0; i < n1; ++i) {
      ff::Elem ai = Fq.from_int(alphas[i]);
      pc.gamma.chars.push_back({mod(pc.t_ij[i]), Fq.inv(Fq.pow(ai, alphas[i]))});
    }
    pc.gamma.chars.push_back({mod(pc.t), Fq.pow(Fq.from_int(alpha), alpha)});
    for (std::size_t i = 0; i < n1; ++i) {
      pc.gamma.gauss.push_back(mod(-pc.t_ij[i]));
      for (std::int64_t b = 1; b < alphas[i]; ++b)
        pc.gamma.ratios.push_back({mod(-pc.t_ij[i] + b * steps[i]), b * steps[i]});
    }
    pc.gamma.gauss.push_back(mod(pc.t));
    for (std::int64_t b = 1; b < alpha; ++b) pc.gamma.ratios.push_back({mod(pc.t + b * step), b * step});

    pc.full.level = 1;
    for (std::int64_t b = 0; b < alpha; ++b) pc.full.upper.push_back(mod(pc.t + b * step));
    for (std::size_t i = 0; i < n1; ++i)
      for (std::int64_t b = 0; b < alphas[i]; ++b) pc.full.lower.push_back(mod(pc.t_ij[i] + b * steps[i]));
    pc.reduction = hg::reduce_params(pc.full, M);
    out.push_back(std::move(pc));
  }
  return out;
}

}  // namespace

std::vector<SpectralPiece> build_pieces(const fam::FamilySpec& spec, ff::Elem lambda) {
  ff::FiniteField Fq(spec.p, spec.f);
  check_lambda(Fq, spec, lambda);
  check_asm(spec);
  intlin::KernelReps reps = intlin::kernel_reps(spec.A, static_cast<std::int64_t>(spec.q), spec.alpha);
  return pieces_from_reps(spec, Fq, lambda, reps);
}

Complex eval_gamma(const GammaRecipe& gamma, const cg::Level& base, unsigned r) {
  if (base.r() != 1) throw LevelMismatch("eval_gamma needs the level-1 field");
  Complex v(1);
  for (const auto& c : gamma.chars) v *= base.chi(c.k, base.embed(c.arg));
  for (auto k : gamma.gauss) v *= -base.gauss(k);
  for (const auto& q : gamma.ratios) v *= base.gauss(q.num) / base.gauss(q.den);
  v = pow_int(v, r);
  if ((gamma.gauss.size() % 2 == 1) != (gamma.sign < 0)) v = -v;
  return v;
}

Complex eval_gamma_direct(const GammaRecipe& gamma, const cg::Level& level) {
  Complex v(gamma.sign);
  for (const auto& c : gamma.chars) v *= level.chi(level.lifted(c.k), level.embed(c.arg));
  for (auto k : gamma.gauss) v *= level.gauss(level.lifted(k));
  for (const auto& q : gamma.ratios) v *= level.gauss(level.lifted(q.num)) / level.gauss(level.lifted(q.den));
  return v;
}

Complex eval_piece(const SpectralPiece& piece, const cg::Level& base, const cg::Level& level) {
  const Real Q = Real(static_cast<std::uint64_t>(level.size()));
  Complex f = hg::tghf(level, hg::lift(piece.reduction.reduced, level), level.embed(piece.x));
  f *= pow_real(Q, static_cast<std::int64_t>(piece.trivial_pairs()) - 1);
  return eval_gamma(piece.gamma, base, level.r()) * f;
}

Complex eval_piece_full(const SpectralPiece& piece, const cg::Level& base, const cg::Level& level) {
  return eval_gamma(piece.gamma, base, level.r()) * hg::tghf(level, hg::lift(piece.full, level), level.embed(piece.x));
}

std::vector<GeometricTerm> u_terms(const fam::FamilySpec& spec, const cg::Level& base) {
  const std::size_t n1 = spec.vars();
  const int n = spec.n;
  const Real q = Real(static_cast<std::uint64_t>(base.size()));
  std::vector<GeometricTerm> out;
  for (std::size_t t = 1; t < n1; ++t) {
    if (2 * static_cast<int>(t) < n + 1) continue;
    for (const auto& J : intlin::subsets_of_size(n1, t)) {
      std::vector<std::size_t> cols = intlin::columns_supported_in(spec.A, J);
      const auto s = static_cast<std::int64_t>(cols.size());
      if (s == 0) continue;
      intlin::IntMatrix R = intlin::restricted_matrix(spec.A, J);
      if (intlin::smith_normal_form(R).rank() != cols.size()) {
        throw AssumptionViolation("restricted matrix for J = " + intlin::format_subset(J) +
                                  " has a kernel that grows with q");
      }
      const std::int64_t free = static_cast<std::int64_t>(t) - s;
      intlin::for_each_kernel_vector(R, base.order(), [&](const std::vector<std::int64_t>& k) {
        std::int64_t nontrivial = 0;
        Complex b(1);
        for (std::size_t jj = 0; jj < cols.size(); ++jj) {
          if (k[jj] == 0) continue;
          ++nontrivial;
          b *= -base.gauss(-k[jj]) * base.chi(k[jj], base.embed(spec.c[cols[jj]]));
        }
        std::int64_t twice_i = n + 1 - nontrivial;
        if (twice_i < 0 || twice_i % 2 != 0) return;
        std::int64_t i = twice_i / 2;
        if (i > free) return;
        GeometricTerm term;
        term.weight = binomial(free, i) * ((free - i) % 2 == 0 ? 1 : -1) * (s % 2 == 0 ? 1 : -1);
        term.base = b * pow_real(q, i - 1);
        term.J = J;
        term.i = static_cast<std::size_t>(i);
        out.push_back(std::move(term));
      });
    }
  }
  return out;
}

Complex u_value(const std::vector<GeometricTerm>& terms, unsigned r) {
  Complex v;
  for (const auto& t : terms) v += pow_int(t.base, r) * Real(t.weight);
  return v;
}

Complex compute_u(const fam::FamilySpec& spec, const cg::Level& level) {
  const std::size_t n1 = spec.vars();
  const int n = spec.n;
  const Real Q = Real(static_cast<std::uint64_t>(level.size()));
  Complex u;
  for (std::size_t t = 1; t < n1; ++t) {
    if (2 * static_cast<int>(t) < n + 1) continue;
    for (const auto& J : intlin::subsets_of_size(n1, t)) {
      std::vector<std::size_t> cols = intlin::columns_supported_in(spec.A, J);
      const auto s = static_cast<std::int64_t>(cols.size());
      if (s == 0) continue;
      const std::int64_t free = static_cast<std::int64_t>(t) - s;
      std::vector<Complex> by_nontrivial(cols.size() + 1);
      intlin::for_each_kernel_vector(intlin::restricted_matrix(spec.A, J), level.order(),
                                     [&](const std::vector<std::int64_t>& k) {
                                       Complex term(1);
                                       std::size_t nontrivial = 0;
                                       for (std::size_t jj = 0; jj < cols.size(); ++jj) {
                                         term *= level.gauss(-k[jj]);
                                         if (k[jj] != 0) {
                                           ++nontrivial;
                                           term *= level.chi(k[jj], level.embed(spec.c[cols[jj]]));
                                         }
                                       }
                                       by_nontrivial[nontrivial] += term;
                                     });
      for (std::int64_t i = 0; i <= free; ++i) {
        std::int64_t want = n + 1 - 2 * i;
        if (want < 0 || want > s) continue;
        Real coef = Real(binomial(free, i) * ((free - i) % 2 == 0 ? 1 : -1)) * pow_real(Q, i - 1);
        u += by_nontrivial[static_cast<std::size_t>(want)] * coef;
      }
    }
  }
  return u;
}

Analysis analyze(const fam::FamilySpec& spec, ff::Elem lambda, const cg::Level& base) {
  if (base.r() != 1) throw LevelMismatch("analyze needs the level-1 field");
  const ff::FiniteField& Fq = *base.field().base;
  check_lambda(Fq, spec, lambda);
  check_asm(spec);
  Analysis an;
  an.spec = spec;
  an.lambda = lambda;
  an.x = fam::hypergeometric_argument(Fq, spec, lambda);
  an.reps = intlin::kernel_reps(spec.A, static_cast<std::int64_t>(spec.q), spec.alpha);
  an.pieces = pieces_from_reps(spec, Fq, lambda, an.reps);
  an.u_terms = u_terms(spec, base);
  an.D = intlin::compute_D(spec.A);
  return an;
}

Prediction predicted_count(const Analysis& an, cg::Tower& tower, unsigned r, const Real& gap) {
  auto base = tower.level(1);
  auto level = tower.level(r);
  const Real Q = Real(static_cast<std::uint64_t>(level->size()));
  const int n = an.spec.n;
  Prediction out;
  Complex raw;
  for (int i = 0; i < n; ++i) raw += Complex(pow_real(Q, i));
  out.u = u_value(an.u_terms, r);
  raw += out.u;
  if (an.D.value != 0) raw += Complex(pow_real(Q, (n - 1) / 2) * Real(an.D.value));
  for (const auto& pc : an.pieces) out.pieces += eval_piece(pc, *base, *level);
  if (n % 2 == 1) out.pieces = -out.pieces;
  raw += out.pieces;
  out.raw = raw;
  out.count = round_to_int(raw, gap, "predicted count");
  return out;
}

cg::IdentityPair star_identity_check(const Analysis& an, cg::Tower& tower, unsigned r) {
  auto base = tower.level(1);
  auto level = tower.level(r);
  const auto& spec = an.spec;
  const std::size_t n1 = spec.vars();
  const ff::Elem minus_lambda = level->F().neg(level->embed(an.lambda));
  std::vector<ff::Elem> c;
  for (auto ci : spec.c) c.push_back(level->embed(ci));
  cg::IdentityPair out;
  intlin::for_each_kernel_vector(intlin::aprime_of(spec.A), level->order(), [&](const std::vector<std::int64_t>& k) {
    Complex term(1);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n1; ++i) {
      term *= level->gauss(-k[i]) * level->chi(k[i], c[i]);
      total += k[i];
    }
    term *= level->gauss(total) * level->chi(-total, minus_lambda);
    out.lhs += term;
  });
  for (const auto& pc : an.pieces) out.rhs += eval_piece_full(pc, *base, *level);
  out.rhs *= Real(level->order());
  if (spec.n % 2 == 1) out.rhs = -out.rhs;
  return out;
}

ZetaPoly zeta_series(const WeilSeq& f, std::size_t degree_bound) {
  const std::size_t R = f.values.size();
  ZetaPoly out;
  if (degree_bound == 0 || 2 * degree_bound <= R) {
    auto rec = ser::fit_recurrence(f.values, recurrence_tolerance());
    if (!rec) {
      throw DegreeUndetermined("no linear recurrence of order <= " + std::to_string(R / 2) + " fits " +
                               std::to_string(R) + " values");
    }
    out.num = {Complex(1)};
    out.den = {Complex(1)};
    if (rec->order == 0) return out;
    out.betas = ser::recurrence_roots(*rec);
    auto w = ser::integer_weights(f.values, out.betas, tenth_power(8));
    if (!w) throw DegreeUndetermined("recurrence roots carry non-integral multiplicities");
    out.weights = *w;
    std::int64_t degree = 0;
    for (std::size_t k = 0; k < out.betas.size(); ++k) {
      ser::Poly lin{Complex(1), -out.betas[k]};
      for (std::int64_t e = 0; e < std::abs(out.weights[k]); ++e)
        (out.weights[k] > 0 ? out.num : out.den) = ser::mul(out.weights[k] > 0 ? out.num : out.den, lin);
      degree += out.weights[k];
    }
    out.degree = degree < 0 ? 0 : static_cast<std::size_t>(degree);
    ser::Poly expect = ser::zeta_exp(f.values);
    ser::Poly got = ser::series_mul(out.num, ser::series_inv(out.den, R + 1), R + 1);
    Real scale = ser::max_abs(expect) + 1;
    for (std::size_t k = 0; k <= R; ++k) {
      if ((got[k] - expect[k]).abs() > scale * tenth_power(15)) {
        throw DegreeUndetermined("fitted zeta disagrees with the series at T^" + std::to_string(k));
      }
    }
    return out;
  }
  if (R < degree_bound) {
    throw DegreeUndetermined("horizon " + std::to_string(R) + " is below the degree bound " +
                             std::to_string(degree_bound));
  }
  ser::Poly z = ser::zeta_exp(f.values);
  z.resize(degree_bound + 1);
  out.num = z;
  out.den = {Complex(1)};
  out.degree = degree_bound;
  out.certified = false;
  ser::Poly rev(z.rbegin(), z.rend());
  out.betas = ser::roots(rev);
  if (degree_bound == 1) out.betas = {-z[1]};
  out.weights.assign(out.betas.size(), 1);
  return out;
}

std::vector<Complex> weil_roots(const WeilSeq& f) {
  auto rec = ser::fit_recurrence(f.values, recurrence_tolerance());
  if (!rec) throw DegreeUndetermined("no linear recurrence fits " + std::to_string(f.values.size()) + " values");
  if (rec->order == 0) return {};
  return ser::recurrence_roots(*rec);
}

ZetaPoly zeta_from_terms(const std::vector<GeometricTerm>& terms, int sign) {
  ZetaPoly out;
  out.num = {Complex(1)};
  out.den = {Complex(1)};
  std::int64_t degree = 0;
  for (const auto& t : terms) {
    std::int64_t w = sign * t.weight;
    out.betas.push_back(t.base);
    out.weights.push_back(w);
    ser::Poly lin{Complex(1), -t.base};
    for (std::int64_t e = 0; e < std::abs(w); ++e) (w > 0 ? out.num : out.den) = ser::mul(w > 0 ? out.num : out.den, lin);
    degree += w;
  }
  out.degree = degree < 0 ? 0 : static_cast<std::size_t>(degree);
  return out;
}

std::size_t expected_degree(int n) {
  BigInt nn = n;
  BigInt top = bmp::pow(nn, static_cast<unsigned>(n + 1)) + ((n + 1) % 2 == 0 ? nn : -nn);
  return static_cast<std::size_t>(top / (n + 1));
}

unsigned default_horizon(const Analysis& an, std::uint64_t level_budget) {
  std::size_t arity = 1;
  for (const auto& pc : an.pieces) arity = std::max(arity, pc.arity());
  auto R = static_cast<unsigned>(2 * arity);
  const std::uint64_t q = an.spec.q;
  unsigned fits = 0;
  for (std::uint64_t Q = q; Q <= level_budget && fits < R; Q *= q) ++fits;
  return std::max(1u, std::min(R, fits));
}

Assembly assemble_P(const Analysis& an, cg::Tower& tower, unsigned horizon, const Real& gap) {
  const int n = an.spec.n;
  Assembly out;
  out.sign = n % 2 == 1 ? 1 : -1;
  out.expected_degree = expected_degree(n);
  out.horizon = horizon;
  out.D = an.D.value;
  auto base = tower.level(1);
  std::vector<std::shared_ptr<const cg::Level>> levels;
  for (unsigned r = 1; r <= horizon; ++r) levels.push_back(tower.level(r));

  const std::size_t len = out.expected_degree + 3;
  ser::Poly total(len);
  total[0] = Complex(1);
  out.pieces_product = {Complex(1)};
  for (const auto& pc : an.pieces) {
    if (pc.arity() == 0) continue;
    WeilSeq f;
    for (unsigned r = 1; r <= horizon; ++r) f.values.push_back(-eval_piece(pc, *base, *levels[r - 1]));
    PFactor fac{pc.j, zeta_series(f, pc.arity())};
    out.pieces_product = ser::mul(out.pieces_product, fac.zeta.num);
    total = ser::series_mul(total, fac.zeta.num, len);
    if (fac.zeta.den.size() > 1) total = ser::series_mul(total, ser::series_inv(fac.zeta.den, len), len);
    out.factors.push_back(std::move(fac));
  }
  out.u_zeta = zeta_from_terms(an.u_terms, out.sign);
  total = ser::series_mul(total, out.u_zeta.num, len);
  total = ser::series_mul(total, ser::series_inv(out.u_zeta.den, len), len);
  if (out.D != 0) {
    ser::Poly lin{Complex(1), Complex(-pow_real(Real(static_cast<std::uint64_t>(an.spec.q)), (n - 1) / 2))};
    total = ser::series_mul(total, ser::series_pow(lin, out.sign * out.D, len), len);
  }
  for (std::size_t k = out.expected_degree + 1; k < len; ++k) {
    if (total[k].abs() > gap) {
      throw IntegralityError("P(T) has a nonzero coefficient " + to_string(total[k], 12) + " at T^" +
                             std::to_string(k) + " beyond degree " + std::to_string(out.expected_degree));
    }
  }
  for (std::size_t k = 0; k <= out.expected_degree; ++k) {
    try {
      out.coeffs.push_back(round_to_bigint(total[k], gap, "P(T) coefficient"));
    } catch (const RoundingGapError& e) {
      throw IntegralityError("T^" + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

ser::Poly p_power_from_counts(const std::vector<std::int64_t>& counts, int n, std::uint64_t q) {
  std::vector<Complex> neg;
  for (auto v : counts) neg.push_back(Complex(-static_cast<long long>(v)));
  ser::Poly z = ser::zeta_exp(neg);
  const std::size_t len = z.size();
  Real qi = 1;
  for (int i = 0; i < n; ++i) {
    z = ser::series_mul(z, ser::Poly{Complex(1), Complex(-qi)}, len);
    qi *= Real(q);
  }
  return z;
}

std::map<int, std::size_t> classify_weights(const ser::Poly& poly, std::uint64_t q, const Real& rel_tol) {
  std::size_t deg = poly.size();
  while (deg > 0 && poly[deg - 1].norm() == 0) --deg;
  std::map<int, std::size_t> out;
  if (deg <= 1) return out;
  ser::Poly rev(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(deg));
  std::reverse(rev.begin(), rev.end());
  std::vector<Complex> betas = deg == 2 ? std::vector<Complex>{-rev[0] / rev[1]} : ser::roots(rev);
  const Real lq = bmp::log(Real(q));
  for (const auto& b : betas) {
    Real mag = b.abs();
    Real k = bmp::round(2 * bmp::log(mag) / lq);
    Real ratio = mag / bmp::pow(Real(q), k / 2);
    if (bmp::abs(ratio - 1) > rel_tol) {
      throw UnclassifiableRoot("reciprocal root of magnitude " + to_string(mag, 15) + " is not q^{k/2}");
    }
    ++out[k.convert_to<int>()];
  }
  return out;
}

std::map<int, std::size_t> classify_weights(const std::vector<BigInt>& poly, std::uint64_t q, const Real& rel_tol) {
  std::map<int, std::size_t> out;
  for (const auto& [mult, factor] : ser::squarefree_decomposition(poly))
    for (const auto& [w, count] : classify_weights(to_poly(factor), q, rel_tol)) out[w] += count * mult;
  return out;
}

ser::Poly to_poly(const std::vector<BigInt>& coeffs) {
  ser::Poly p;
  for (const auto& c : coeffs) p.push_back(Complex(real_from_bigint(c)));
  return p;
}

}  // namespace hgzeta::zeta
