// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion.
//
//   hgzeta_acceptance [--known-unattainable 3,8]
//
// A criterion listed as known-unattainable still prints FAIL. It only stops
// affecting the exit status when its obstruction witness is confirmed and
// every attainable part of it passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hgzeta/chargauss.hpp"
#include "hgzeta/count.hpp"
#include "hgzeta/errors.hpp"
#include "hgzeta/family.hpp"
#include "hgzeta/hgff.hpp"
#include "hgzeta/padic.hpp"
#include "hgzeta/zetafac.hpp"
#include "oracles.hpp"

using namespace hgzeta;

namespace {

// tolerances and limits
const Real& kGap() {
  static const Real v = tenth_power(10);
  return v;
}
const Real& kIdentityTol() {
  static const Real v = tenth_power(30);
  return v;
}
const Real& kWeightTol() {
  static const Real v = tenth_power(6);
  return v;
}
constexpr unsigned kPadicUnitRootPrecision = 4;
constexpr unsigned kFglPrecision = 6;
constexpr std::uint64_t kFglMaxM = 20;
constexpr std::int64_t kVerdictRange = 200;

struct Result {
  bool pass = true;
  std::ostringstream detail;
  std::string first_failure;
  // set when the only failing part is a confirmed structural obstruction
  std::string unattainable;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) first_failure = what;
      pass = false;
    }
  }
};

fam::FamilySpec dwork(int n, std::uint32_t p, unsigned f = 1) {
  return fam::make_family(p, f, oracle::dwork_matrix(n), std::vector<ff::Elem>(static_cast<std::size_t>(n) + 1, 1));
}

fam::FamilySpec yu_yui(std::uint32_t p) { return fam::make_family(p, 1, oracle::yu_yui_matrix(), {1, 1, 1, 1}); }

std::vector<ff::Elem> smooth_lambdas(const fam::FamilySpec& spec, unsigned scan_r, std::size_t limit = ~std::size_t{0}) {
  ff::FiniteField F(spec.p, spec.f);
  std::vector<ff::Elem> out;
  for (ff::Elem l = 1; l < F.size() && out.size() < limit; ++l) {
    if (fam::is_degenerate(F, spec, l)) continue;
    if (fam::smoothness_scan(spec, l, scan_r).singular) continue;
    out.push_back(l);
  }
  return out;
}

bool assumptions_hold(const intlin::IntMatrix& A, const intlin::AlphaData& alpha, std::int64_t q) {
  return intlin::check_assumptions(A, q, alpha).pass() && (q - 1) % alpha.alpha_total == 0;
}

// alpha^alpha / prod alpha_i^alpha_i with c_i = 1
boost::multiprecision::cpp_rational exact_C(const intlin::AlphaData& a) {
  using boost::multiprecision::cpp_rational;
  cpp_rational v = boost::multiprecision::pow(BigInt(a.alpha_total), static_cast<unsigned>(a.alpha_total));
  for (auto ai : a.alphas) v /= boost::multiprecision::pow(BigInt(ai), static_cast<unsigned>(ai));
  return v;
}

std::vector<BigInt> divisors_of(const fam::FamilySpec& spec) {
  return intlin::smith_normal_form(intlin::aprime_of(spec.A)).divisors;
}

void criterion1(Result& res) {
  const std::vector<std::pair<int, std::uint32_t>> dworks{{2, 7}, {3, 13}, {4, 11}, {5, 7}};
  for (auto [n, p] : dworks) {
    auto spec = dwork(n, p);
    const std::int64_t m = n + 1;
    res.check(spec.alpha.alphas == std::vector<std::int64_t>(static_cast<std::size_t>(m), 1) && spec.alpha.alpha_total == m,
              "Dwork alpha n=" + std::to_string(n));
    BigInt expect = boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(m));
    res.check(exact_C(spec.alpha) == expect, "Dwork C n=" + std::to_string(n));
    res.check(BigInt(spec.C) == expect % p, "Dwork C mod p n=" + std::to_string(n));
    std::vector<BigInt> div{1};
    for (int i = 1; i < n; ++i) div.push_back(m);
    div.push_back(0);
    res.check(divisors_of(spec) == div, "Dwork A' divisors n=" + std::to_string(n));
  }
  auto yy = yu_yui(73);
  res.check(yy.alpha.alphas == std::vector<std::int64_t>{2, 4, 3, 3} && yy.alpha.alpha_total == 12, "Yu-Yui alpha");
  BigInt yc = BigInt(1) << 14;
  yc *= 729;
  res.check(exact_C(yy.alpha) == yc, "Yu-Yui C = 2^14 3^6");
  res.check(BigInt(yy.C) == yc % 73, "Yu-Yui C mod 73");
  res.check(divisors_of(yy) == std::vector<BigInt>{1, 1, 4, 0}, "Yu-Yui A' divisors");

  int tested = 0;
  for (std::int64_t q = 5; q < kVerdictRange; ++q) {
    if (!oracle::is_prime_power(q) || q % 2 == 0 || q % 3 == 0) continue;
    for (auto [n, p] : dworks) {
      if (q % (n + 1) == 0 || n == 5) continue;
      auto spec = dwork(n, p);
      res.check(assumptions_hold(spec.A, spec.alpha, q) == (q % (n + 1) == 1),
                "Dwork n=" + std::to_string(n) + " verdict at q=" + std::to_string(q));
    }
    res.check(assumptions_hold(yy.A, yy.alpha, q) == (q % 24 == 1), "Yu-Yui verdict at q=" + std::to_string(q));
    ++tested;
  }
  res.detail << "Dwork n=2..5 and Yu-Yui goldens exact, verdicts (Dwork n=2..4, Yu-Yui) over " << tested << " prime powers q < " << kVerdictRange;
}

void criterion2(Result& res) {
  Real worst = 0;
  auto track = [&](const Real& r) { worst = std::max<Real>(worst, r); };
  for (std::uint32_t p : {5u, 7u, 13u}) {
    cg::Tower tower(p, 1);
    auto L = tower.level(1);
    const Real q = Real(p);
    track(distance(L->gauss(0), Complex(-1)));
    for (std::int64_t k = 1; k < L->order(); ++k) {
      const Complex& g = L->gauss(k);
      track(boost::multiprecision::abs(g.abs() * g.abs() - q));
      track(distance(g * L->gauss(-k), Complex(q * L->chi_minus_one(k))));
    }
    for (unsigned r = 2; r <= 3; ++r)
      for (std::int64_t k = 0; k < L->order(); ++k) track(cg::dh_lift_check(tower, k, r).residual());
  }
  std::mt19937 rng(20261016);
  int instances = 0;
  for (std::uint32_t p : {7u, 13u}) {
    cg::Tower tower(p, 1);
    auto L = tower.level(1);
    std::vector<std::int64_t> alphas = p == 7 ? std::vector<std::int64_t>{1, 1, 1} : std::vector<std::int64_t>{1, 2, 1};
    std::uniform_int_distribution<std::int64_t> pk(0, L->order() - 1);
    std::uniform_int_distribution<ff::Elem> px(1, p - 1);
    for (int t = 0; t < 25; ++t, ++instances) {
      std::vector<std::int64_t> a{pk(rng), pk(rng), pk(rng)};
      track(hg::multi_hyper_check(*L, alphas, a, pk(rng), px(rng)).residual());
    }
  }
  res.check(worst < kIdentityTol(), "max residual " + to_string(worst, 6));
  res.detail << "q in {5,7,13}, DH lifts r<=3, " << instances << " multi-hypergeometric instances, max residual "
             << to_string(worst, 3);
}

struct Instance {
  std::string name;
  fam::FamilySpec spec;
  std::vector<ff::Elem> lambdas;
  unsigned r_brute = 0;     // brute force for r <= r_brute
  unsigned r_delsarte = 0;  // Delsarte for r_brute < r <= r_delsarte
};

struct InstanceOutcome {
  bool ok = true;
  std::size_t comparisons = 0;
  Real star_residual = 0;
  double seconds = 0;
};

InstanceOutcome run_instance(const Instance& in, Result& res) {
  InstanceOutcome out;
  auto t0 = std::chrono::steady_clock::now();
  cg::Tower tower(in.spec.p, in.spec.f);
  for (ff::Elem l : in.lambdas) {
    auto an = zeta::analyze(in.spec, l, *tower.level(1));
    for (unsigned r = 1; r <= std::max(in.r_brute, in.r_delsarte); ++r) {
      auto pr = zeta::predicted_count(an, tower, r, kGap());
      std::int64_t oracle = r <= in.r_brute ? count::brute_count(in.spec, l, r).total
                                            : count::delsarte_full_count(in.spec, l, *tower.level(r), kGap()).total;
      bool ok = pr.count == oracle;
      out.ok = out.ok && ok;
      res.check(ok, in.name + " lambda=" + std::to_string(l) + " r=" + std::to_string(r) + " predicted " +
                        std::to_string(pr.count) + " vs " + std::to_string(oracle));
      ++out.comparisons;
      out.star_residual = std::max<Real>(out.star_residual, zeta::star_identity_check(an, tower, r).residual());
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::string lambdas_str(const std::vector<ff::Elem>& ls) {
  std::string s = "{";
  for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? "," : "") + std::to_string(ls[i]);
  return s + "}";
}

struct Shared {
  Real star_residual = 0;
  std::size_t star_instances = 0;
};

void criterion3(Result& res, Result& alt, Shared& shared) {
  // (a)
  auto a_spec = dwork(2, 7);
  auto a_lambdas = smooth_lambdas(a_spec, 3);
  res.check(a_lambdas == std::vector<ff::Elem>{1, 2, 4}, "(a) smooth lambdas are those with lambda^3 != 6");
  auto a = run_instance({"(a)", a_spec, a_lambdas, 3, 0}, res);
  res.check(a.seconds < 10, "(a) runtime");
  // (b)
  auto b_spec = dwork(3, 5);
  auto b_lambdas = smooth_lambdas(b_spec, 2);
  bool all_degenerate = true;
  {
    ff::FiniteField F(5, 1);
    for (ff::Elem l = 1; l < 5; ++l) all_degenerate = all_degenerate && fam::is_degenerate(F, b_spec, l);
  }
  res.check(!b_lambdas.empty(), "(b) Dwork n=3 q=5 has no smooth lambda");
  // (c)
  auto c_spec = yu_yui(73);
  auto c_lambdas = smooth_lambdas(c_spec, 1, 3);
  auto c = run_instance({"(c)", c_spec, c_lambdas, 1, 2}, res);
  res.check(c.seconds < 600, "(c) runtime");
  // (b-alt): the same family where smooth members exist
  auto balt_spec = dwork(3, 13);
  auto balt_lambdas = smooth_lambdas(balt_spec, 1);
  auto balt = run_instance({"(b-alt)", balt_spec, balt_lambdas, 2, 0}, alt);
  alt.check(balt.seconds < 60, "(b-alt) runtime");
  alt.detail << "Dwork n=3 q=13 lambda=" << lambdas_str(balt_lambdas) << " r=1..2 vs brute, " << balt.comparisons
             << " exact, " << std::fixed;
  alt.detail.precision(1);
  alt.detail << balt.seconds << " s";

  for (const auto* o : {&a, &c, &balt}) shared.star_residual = std::max<Real>(shared.star_residual, o->star_residual);
  shared.star_instances = a.comparisons + c.comparisons + balt.comparisons;

  if (all_degenerate && b_lambdas.empty() && a.ok && c.ok && a.seconds < 10 && c.seconds < 600) {
    res.unattainable = "Dwork n=3 q=5: C = 4^4 = 1 and lambda^4 = 1 for every lambda in F_5^x, so every member is singular";
  }
  res.detail.setf(std::ios::fixed);
  res.detail.precision(1);
  res.detail << "(a) lambda=" << lambdas_str(a_lambdas) << " r=1..3: " << a.comparisons << " exact in " << a.seconds
             << " s; (b) " << b_lambdas.size() << " smooth lambda; (c) lambda=" << lambdas_str(c_lambdas)
             << " r=1 brute, r=2 Delsarte: " << c.comparisons << " exact in " << c.seconds << " s";
}

void criterion4(Result& res, const Shared& shared) {
  res.check(shared.star_instances > 0, "no instances");
  res.check(shared.star_residual < kIdentityTol(), "star residual " + to_string(shared.star_residual, 6));
  res.detail << shared.star_instances << " (lambda, r) instances from (a), (c), (b-alt), max residual "
             << to_string(shared.star_residual, 3);
}

// N_r for r = 1..6: brute through r = 3, Delsarte beyond
struct CubicData {
  fam::FamilySpec spec = dwork(2, 7);
  cg::Tower tower{7, 1};
  std::vector<ff::Elem> lambdas;
  std::map<ff::Elem, std::vector<count::CountReport>> counts;

  CubicData() : lambdas(smooth_lambdas(spec, 3)) {
    for (ff::Elem l : lambdas) {
      for (unsigned r = 1; r <= 6; ++r) {
        counts[l].push_back(r <= 3 ? count::brute_count(spec, l, r)
                                   : count::delsarte_full_count(spec, l, *tower.level(r), kGap()));
      }
    }
  }
};

CubicData& cubic() {
  static CubicData d;
  return d;
}

void criterion5(Result& res) {
  auto& d = cubic();
  const Real bound = Real(1) * (1 + kWeightTol());  // q^{(n-2)/2} = 1
  Real worst = 0;
  for (ff::Elem l : d.lambdas) {
    auto an = zeta::analyze(d.spec, l, *d.tower.level(1));
    zeta::WeilSeq diff;
    for (unsigned r = 1; r <= 6; ++r) {
      const Real Q = Real(static_cast<std::uint64_t>(d.tower.level(r)->size()));
      auto pr = zeta::predicted_count(an, d.tower, r, kGap());
      Real star = Real(d.counts[l][r - 1].star_part);
      diff.values.push_back(Complex(star - (Q - 1) * (Q - 1) / Q) - pr.pieces);
    }
    for (const auto& b : zeta::weil_roots(diff)) worst = std::max<Real>(worst, b.abs());
  }
  res.check(worst <= bound, "root magnitude " + to_string(worst, 10));
  res.detail << "Dwork n=2 q=7 lambda=" << lambdas_str(d.lambdas) << ", r=1..6, max root magnitude "
             << to_string(worst, 10) << " <= 1";
}

std::map<ff::Elem, zeta::Assembly>& cubic_P() {
  static std::map<ff::Elem, zeta::Assembly> m = [] {
    std::map<ff::Elem, zeta::Assembly> out;
    auto& d = cubic();
    for (ff::Elem l : d.lambdas) {
      auto an = zeta::analyze(d.spec, l, *d.tower.level(1));
      out.emplace(l, zeta::assemble_P(an, d.tower, 4, kGap()));
    }
    return out;
  }();
  return m;
}

void criterion6(Result& res) {
  auto& d = cubic();
  const Real root7 = boost::multiprecision::sqrt(Real(7));
  Real worst_mag = 0, worst_series = 0;
  for (ff::Elem l : d.lambdas) {
    const auto& as = cubic_P().at(l);
    res.check(as.coeffs.size() == 3, "deg P = 2 at lambda=" + std::to_string(l));
    if (as.coeffs.size() != 3) continue;
    ser::Poly rev{Complex(real_from_bigint(as.coeffs[2])), Complex(real_from_bigint(as.coeffs[1])), Complex(1)};
    for (const auto& b : ser::roots(rev)) worst_mag = std::max<Real>(worst_mag, boost::multiprecision::abs(b.abs() / root7 - 1));
    std::vector<std::int64_t> counts;
    for (const auto& c : d.counts[l]) counts.push_back(c.total);
    ser::Poly from_counts = zeta::p_power_from_counts(counts, 2, 7);
    ser::Poly P = zeta::to_poly(as.coeffs);
    P.resize(from_counts.size());
    for (std::size_t k = 0; k < P.size(); ++k) worst_series = std::max<Real>(worst_series, distance(P[k], from_counts[k]));
    res.check(from_counts.size() == 7, "series through T^6");
  }
  res.check(worst_mag < kWeightTol(), "root magnitude deviation " + to_string(worst_mag, 6));
  res.check(worst_series < kGap(), "count series deviation " + to_string(worst_series, 6));
  std::ostringstream ps;
  for (ff::Elem l : d.lambdas) {
    const auto& c = cubic_P().at(l).coeffs;
    ps << " P_" << l << "=1";
    if (c.size() == 3) ps << (c[1] < 0 ? "" : "+") << c[1] << "T+" << c[2] << "T^2";
  }
  res.detail << "integer P, deg 2," << ps.str() << "; |beta|/sqrt7 - 1 <= " << to_string(worst_mag, 3)
             << ", series residual through T^6 " << to_string(worst_series, 3);
}

void criterion7(Result& res) {
  auto t0 = std::chrono::steady_clock::now();
  int checked = 0;
  for (const auto& spec : {dwork(2, 7), yu_yui(73)}) {
    padic::Ring R(spec.p, 1, kFglPrecision);
    ff::FiniteField F(spec.p, 1);
    for (ff::Elem l : {1u, 2u, 4u, 5u}) {
      if (fam::is_degenerate(F, spec, l)) continue;
      auto L = R.teichmuller(l);
      for (std::uint64_t m = 0; m <= kFglMaxM; ++m, ++checked) {
        auto pair = padic::fgl_log_coefficient(R, spec, L, m);
        res.check(pair.multinomial == pair.hypergeometric,
                  "p=" + std::to_string(spec.p) + " lambda=" + std::to_string(l) + " m=" + std::to_string(m));
      }
    }
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.check(s < 5, "runtime");
  res.detail << checked << " coefficient pairs equal mod p^6 (Dwork n=2 p=7, Yu-Yui p=73), " << std::fixed;
  res.detail.precision(2);
  res.detail << s << " s";
}

struct SweepOutcome {
  int ordinary = 0;
  int supersingular = 0;
  bool consistent = true;
};

SweepOutcome unit_root_sweep(const fam::FamilySpec& spec, const std::vector<ff::Elem>& lambdas,
                             const std::function<std::vector<BigInt>(ff::Elem)>& P_of, Result& res, const std::string& name) {
  SweepOutcome out;
  padic::Ring R(spec.p, spec.f, kPadicUnitRootPrecision);
  for (ff::Elem l : lambdas) {
    auto P = P_of(l);
    auto rep = padic::unit_root(spec, l, kPadicUnitRootPrecision);
    std::size_t units = padic::unit_reciprocal_roots(P, spec.p);
    bool ok = rep.value.has_value() == (units == 1);
    if (rep.value) ok = ok && padic::eval_at_inverse(R, P, *rep.value) == R.zero();
    res.check(ok, name + " lambda=" + std::to_string(l));
    out.consistent = out.consistent && ok;
    (rep.value ? out.ordinary : out.supersingular) += 1;
  }
  return out;
}

void criterion8(Result& res, Result& alt) {
  auto t0 = std::chrono::steady_clock::now();
  auto& d = cubic();
  auto a = unit_root_sweep(d.spec, d.lambdas, [&](ff::Elem l) { return cubic_P().at(l).coeffs; }, res, "(a)");
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.check(s < 60, "runtime");
  res.check(a.ordinary > 0 && a.supersingular > 0,
            "sweep has " + std::to_string(a.ordinary) + " ordinary and " + std::to_string(a.supersingular) + " supersingular");
  // obstruction: every smooth member has full rational 3-torsion, so 9 | N_1 while supersingular means N_1 = q + 1
  bool witness = a.supersingular == 0;
  for (ff::Elem l : d.lambdas) witness = witness && d.counts[l][0].total % 9 == 0;
  if (witness && a.consistent && s < 60) {
    res.unattainable = "q=7 = 1 mod 3 forces 9 | N_1 != q+1 for every smooth Dwork cubic, so no supersingular member exists";
  }
  res.detail << "lambda=" << lambdas_str(d.lambdas) << ": " << a.ordinary << " ordinary, " << a.supersingular
             << " supersingular, P(1/gamma) = 0 mod 7^4 for each ordinary member";

  // same checks where both kinds occur
  auto t1 = std::chrono::steady_clock::now();
  std::ostringstream summary;
  {
    auto spec = dwork(2, 7, 2);
    cg::Tower tower(7, 2);
    auto lambdas = smooth_lambdas(spec, 1);
    auto sw = unit_root_sweep(
        spec, lambdas,
        [&](ff::Elem l) {
          auto an = zeta::analyze(spec, l, *tower.level(1));
          return zeta::assemble_P(an, tower, zeta::default_horizon(an), kGap()).coeffs;
        },
        alt, "q=49");
    alt.check(sw.ordinary > 0 && sw.supersingular > 0, "q=49 sweep lacks one kind");
    summary << "Dwork n=2 q=49: " << sw.ordinary << " ordinary, " << sw.supersingular << " supersingular; ";
  }
  {
    auto spec = dwork(3, 13);
    cg::Tower tower(13, 1);
    auto lambdas = smooth_lambdas(spec, 1);
    auto sw = unit_root_sweep(
        spec, lambdas,
        [&](ff::Elem l) {
          auto an = zeta::analyze(spec, l, *tower.level(1));
          return zeta::assemble_P(an, tower, 3, kGap()).coeffs;
        },
        alt, "quartic q=13");
    alt.check(sw.ordinary > 0 && sw.supersingular > 0, "quartic q=13 sweep lacks one kind");
    summary << "Dwork n=3 q=13: " << sw.ordinary << " ordinary, " << sw.supersingular << " supersingular";
  }
  double s1 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
  alt.check(s1 < 120, "runtime");
  alt.detail << summary.str() << "; all consistent, " << std::fixed;
  alt.detail.precision(1);
  alt.detail << s1 << " s";
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> known;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--known-unattainable" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string tok;
      while (std::getline(ss, tok, ',')) known.insert(tok);
    } else {
      std::fprintf(stderr, "usage: %s [--known-unattainable ids]\n", argv[0]);
      return 2;
    }
  }

  int failures = 0;
  auto report = [&](const std::string& id, Result& r, double seconds, bool supplementary) {
    std::string status = r.pass ? "PASS" : "FAIL";
    std::string tail = r.pass ? "" : "; first failure: " + r.first_failure;
    bool excused = false;
    if (!r.pass && !r.unattainable.empty()) {
      tail += " [unattainable: " + r.unattainable + "]";
      excused = known.count(id) > 0;
    }
    if (r.pass && known.count(id)) {
      tail = " [listed as unattainable but passed]";
      ++failures;
    }
    if (!r.pass && !excused) ++failures;
    std::printf("%s %s: %s  %s%s (%.1f s)\n", supplementary ? "supplement" : "criterion", id.c_str(), status.c_str(),
                r.detail.str().c_str(), tail.c_str(), seconds);
    std::fflush(stdout);
  };
  auto timed = [](const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  auto guarded = [&](Result& r, const std::function<void()>& fn) {
    return timed([&] {
      try {
        fn();
      } catch (const Error& e) {
        r.check(false, e.what());
      }
    });
  };

  Shared shared;
  Result r1, r2, r3, r3alt, r4, r5, r6, r7, r8, r8alt;
  double s1 = guarded(r1, [&] { criterion1(r1); });
  r1.check(s1 < 1, "runtime");
  report("1", r1, s1, false);
  double s2 = guarded(r2, [&] { criterion2(r2); });
  r2.check(s2 < 30, "runtime");
  report("2", r2, s2, false);
  double s3 = guarded(r3, [&] { criterion3(r3, r3alt, shared); });
  report("3", r3, s3, false);
  report("3(b-alt)", r3alt, 0, true);
  double s4 = guarded(r4, [&] { criterion4(r4, shared); });
  report("4", r4, s4, false);
  double s5 = guarded(r5, [&] { criterion5(r5); });
  report("5", r5, s5, false);
  double s6 = guarded(r6, [&] { criterion6(r6); });
  report("6", r6, s6, false);
  double s7 = guarded(r7, [&] { criterion7(r7); });
  report("7", r7, s7, false);
  double s8 = guarded(r8, [&] { criterion8(r8, r8alt); });
  report("8", r8, s8, false);
  report("8-alt", r8alt, 0, true);
  return failures == 0 ? 0 : 1;
}
