// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "pipeline.hpp"

#include <chrono>
#include <sstream>

#include "hgzeta/count.hpp"
#include "hgzeta/family.hpp"
#include "hgzeta/padic.hpp"
#include "hgzeta/parallel.hpp"
#include "hgzeta/points.hpp"
#include "hgzeta/zetafac.hpp"

namespace hgzeta::cli {

using nlohmann::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Config:
      return kConfig;
    case ErrorKind::Assumption:
      return kAssumption;
    case ErrorKind::Budget:
      return kBudget;
    case ErrorKind::Mismatch:
    case ErrorKind::Numeric:
      return kMismatch;
  }
  return kMismatch;
}

namespace {

json bigints_json(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json padic_json(const padic::PadicElem& a) {
  if (a.c.size() == 1) return a.c[0];
  return json(a.c);
}

json matrix_json(const intlin::IntMatrix& A) {
  json out = json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < A.cols(); ++k) row.push_back(A.at64(i, k));
    out.push_back(row);
  }
  return out;
}

json subset_json(const std::vector<std::size_t>& s) {
  json out = json::array();
  for (auto i : s) out.push_back(i + 1);
  return out;
}

json structure_json(const fam::FamilySpec& spec, const intlin::AssumptionVerdict& verdict) {
  json s;
  s["A"] = matrix_json(spec.A);
  s["c"] = spec.c;
  s["permutation"] = subset_json(spec.permutation);
  s["alpha"] = spec.alpha.alpha_total;
  s["alphas"] = spec.alpha.alphas;
  s["C"] = spec.C;
  auto snf = intlin::smith_normal_form(intlin::aprime_of(spec.A));
  json divisors = json::array();
  BigInt d = 1;
  for (const auto& v : snf.divisors) {
    divisors.push_back(v.str());
    if (v != 0) d *= v;
  }
  s["aprime_divisors"] = divisors;
  s["d"] = d.str();
  auto D = intlin::compute_D(spec.A);
  json Dj{{"value", D.value}, {"subsets", json::array()}};
  for (const auto& J : D.subsets) Dj["subsets"].push_back(subset_json(J));
  if (D.literal_reading != D.value) Dj["literal_reading"] = D.literal_reading;
  s["D"] = Dj;
  json asm2 = json::array();
  for (const auto& e : verdict.asm2.entries) {
    json row{{"J", subset_json(e.subset)}, {"columns", subset_json(e.columns)}, {"pass", e.pass}};
    json dv = json::array();
    for (const auto& v : e.divisors) dv.push_back(v.str());
    row["divisors"] = dv;
    asm2.push_back(row);
  }
  s["assumptions"] = {{"asm1", verdict.asm1},
                      {"asm2", verdict.asm2.pass},
                      {"alpha_divides_q_minus_1", (spec.q - 1) % static_cast<std::uint64_t>(spec.alpha.alpha_total) == 0},
                      {"asm2_table", asm2}};
  if (!verdict.asm1) s["assumptions"]["asm1_detail"] = verdict.asm1_detail;
  return s;
}

bool assumptions_pass(const fam::FamilySpec& spec, const intlin::AssumptionVerdict& verdict) {
  return verdict.pass() && (spec.q - 1) % static_cast<std::uint64_t>(spec.alpha.alpha_total) == 0;
}

json pieces_json(const zeta::Analysis& an) {
  json out = json::array();
  for (const auto& pc : an.pieces) {
    out.push_back({{"j", pc.j},
                   {"s", pc.s},
                   {"t_ij", pc.t_ij},
                   {"t", pc.t},
                   {"delta", pc.delta},
                   {"upper", pc.reduction.reduced.upper},
                   {"lower", pc.reduction.reduced.lower},
                   {"trivial_pairs", pc.trivial_pairs()},
                   {"gamma_weight", pc.gamma_weight}});
  }
  return out;
}

struct Context {
  const RunConfig& cfg;
  const Options& opt;
  const fam::FamilySpec& spec;
  cg::Tower& tower;
  Real gap;
  Real tol;
  unsigned inner_threads;
};

struct LambdaResult {
  json entry;
  std::vector<std::string> mismatches;
  std::optional<ErrorKind> error;
  std::string error_message;
};

std::uint64_t level_size(std::uint64_t q, unsigned r, std::uint64_t cap) {
  std::uint64_t Q = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (Q > cap / q) return 0;
    Q *= q;
  }
  return Q;
}

void run_lambda(const Context& ctx, ff::Elem lambda, LambdaResult& res) {
  const auto& cfg = ctx.cfg;
  const auto& spec = ctx.spec;
  const std::string& cmd = ctx.opt.command;
  const bool verify = cmd == "verify";
  json& e = res.entry;
  auto start = std::chrono::steady_clock::now();
  e["lambda"] = lambda;
  ff::FiniteField Fq(spec.p, spec.f);
  e["x"] = fam::hypergeometric_argument(Fq, spec, lambda);
  if (fam::is_degenerate(Fq, spec, lambda)) {
    e["status"] = "degenerate";
    return;
  }
  auto smooth = fam::smoothness_scan(spec, lambda, cfg.budget.smoothness_r, cfg.budget.smoothness_points, ctx.inner_threads);
  e["smoothness"] = smooth.str();
  if (smooth.singular) {
    e["status"] = "singular";
    return;
  }
  e["status"] = "smooth";
  if (cmd == "analyze") return;

  auto mismatch = [&](const std::string& what) { res.mismatches.push_back("lambda=" + std::to_string(lambda) + ": " + what); };
  std::optional<zeta::Analysis> an;
  if (cmd != "unitroot") {
    an = zeta::analyze(spec, lambda, *ctx.tower.level(1));
    e["pieces"] = pieces_json(*an);
    e["u_terms"] = an->u_terms.size();
  }

  // N_r from the first oracle that produced it
  std::vector<std::optional<std::int64_t>> best(cfg.r_max + 1);
  if (cmd == "count" || verify) {
    json counts = json::array();
    for (unsigned r = 1; r <= cfg.r_max; ++r) {
      json row{{"r", r}};
      std::map<std::string, std::int64_t> totals;
      const std::uint64_t Q = level_size(spec.q, r, cfg.budget.field_size);
      if (cfg.oracles.count("brute")) {
        if (pts::projective_size(level_size(spec.q, r, ~std::uint64_t{0} >> 1), spec.vars(), cfg.budget.points) != 0) {
          auto b = count::brute_count(spec, lambda, r, ctx.inner_threads, cfg.budget.points);
          row["brute"] = {{"total", b.total}, {"star", b.star_part}, {"zero", b.zero_part}};
          totals["brute"] = b.total;
        } else {
          row["brute"] = "skipped (point budget)";
        }
      }
      if (cfg.oracles.count("delsarte")) {
        if (Q != 0) {
          auto d = count::delsarte_full_count(spec, lambda, *ctx.tower.level(r), ctx.gap);
          row["delsarte"] = {{"total", d.total}, {"star", d.star_part}, {"zero", d.zero_part}};
          totals["delsarte"] = d.total;
        } else {
          row["delsarte"] = "skipped (field budget)";
        }
      }
      if (cfg.oracles.count("hgf")) {
        if (Q != 0) {
          auto pr = zeta::predicted_count(*an, ctx.tower, r, ctx.gap);
          row["hgf"] = {{"total", pr.count}, {"u", to_string(pr.u.re, 12)}, {"pieces", to_string(pr.pieces.re, 12)}};
          totals["hgf"] = pr.count;
        } else {
          row["hgf"] = "skipped (field budget)";
        }
      }
      for (const char* name : {"brute", "delsarte", "hgf"}) {
        if (totals.count(name) && !best[r]) best[r] = totals[name];
        if (totals.count(name) && *best[r] != totals[name]) {
          mismatch("r=" + std::to_string(r) + " " + name + " count " + std::to_string(totals[name]) + " differs from " +
                   std::to_string(*best[r]));
        }
      }
      if (verify && Q != 0) {
        auto star = zeta::star_identity_check(*an, ctx.tower, r);
        row["star_identity_residual"] = to_string(star.residual(), 6);
        if (star.residual() > ctx.tol) mismatch("r=" + std::to_string(r) + " star identity residual " + to_string(star.residual(), 6));
      }
      if (verify && totals.size() < 2) row["note"] = "fewer than two oracles ran";
      counts.push_back(row);
    }
    e["counts"] = counts;
  }

  std::optional<zeta::Assembly> P;
  if (cmd == "zeta" || verify) {
    unsigned horizon = zeta::default_horizon(*an, std::min(cfg.budget.zeta_level_size, cfg.budget.field_size));
    std::size_t arity = 0;
    for (const auto& pc : an->pieces) arity = std::max(arity, pc.arity());
    if (horizon < arity) {
      std::string why = "zeta factors of degree " + std::to_string(arity) + " need q^" + std::to_string(arity) +
                        " beyond the level budget (horizon " + std::to_string(horizon) + ")";
      if (!verify) throw BudgetExceeded(why);
      e["zeta"] = "skipped: " + why;
    } else {
      P = zeta::assemble_P(*an, ctx.tower, horizon, ctx.gap);
    }
  }
  if (P) {
    bool certified = P->u_zeta.certified;
    for (const auto& fct : P->factors) certified = certified && fct.zeta.certified;
    json weights = json::object();
    for (auto [w, mult] : zeta::classify_weights(P->coeffs, spec.q, tenth_power(6))) weights[std::to_string(w)] = mult;
    e["zeta"] = {{"P", bigints_json(P->coeffs)},
                 {"degree", P->coeffs.size() - 1},
                 {"expected_degree", P->expected_degree},
                 {"exponent_of_P", spec.n % 2 == 0 ? 1 : -1},
                 {"horizon", P->horizon},
                 {"certified", certified},
                 {"D", P->D},
                 {"root_weights", weights}};
    if (P->coeffs.size() - 1 != P->expected_degree) mismatch("deg P differs from the expected degree");
    if (verify) {
      std::vector<std::int64_t> counts;
      for (unsigned r = 1; r <= cfg.r_max && best[r]; ++r) counts.push_back(*best[r]);
      if (!counts.empty()) {
        ser::Poly from_counts = zeta::p_power_from_counts(counts, spec.n, spec.q);
        ser::Poly mine = zeta::to_poly(P->coeffs);
        if (spec.n % 2 == 1) mine = ser::series_inv(mine, from_counts.size());
        mine.resize(from_counts.size());
        Real worst = 0;
        for (std::size_t k = 0; k < from_counts.size(); ++k) worst = std::max<Real>(worst, distance(mine[k], from_counts[k]));
        e["zeta"]["count_series_terms"] = counts.size();
        e["zeta"]["count_series_residual"] = to_string(worst, 6);
        if (worst > ctx.gap) mismatch("P(T) disagrees with the count series");
      }
    }
  }

  if (cmd == "unitroot" || verify) {
    const unsigned m = cfg.padic_precision;
    padic::Ring R(spec.p, spec.f, m);
    auto rep = padic::unit_root(spec, lambda, m);
    json u{{"precision", m}, {"criterion_residue", rep.residue}, {"ordinary", rep.value.has_value()}};
    if (rep.value) {
      u["unit_root"] = padic_json(*rep.value);
      u["f_value"] = padic_json(*rep.f_value);
    }
    auto fgl = padic::fgl_log_coefficient(R, spec, R.teichmuller(lambda), spec.p - 1);
    u["a1"] = padic_json(fgl.multinomial);
    u["height_one"] = padic::height_one_test(R, fgl.multinomial);
    if (verify) {
      if (!(fgl.multinomial == fgl.hypergeometric)) mismatch("formal-group coefficient forms disagree");
      if (padic::height_one_test(R, fgl.multinomial) != rep.value.has_value()) mismatch("height-one test disagrees with the criterion");
    }
    if (verify && P) {
      std::size_t units = padic::unit_reciprocal_roots(P->coeffs, spec.p);
      u["unit_reciprocal_roots"] = units;
      if ((units == 1) != rep.value.has_value()) mismatch("unit root presence disagrees with the Newton polygon of P");
      if (rep.value) {
        bool root = padic::eval_at_inverse(R, P->coeffs, *rep.value) == R.zero();
        u["root_of_P"] = root;
        if (!root) mismatch("P(1/unit root) is not 0 mod p^" + std::to_string(m));
      }
    }
    e["unitroot"] = u;
  }
  if (ctx.opt.timings) {
    e["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
}

}  // namespace

Outcome run(const RunConfig& cfg, const Options& opt) {
  Outcome out;
  json& rep = out.report;
  rep["command"] = opt.command;
  rep["config"] = to_json(cfg);
  auto start = std::chrono::steady_clock::now();
  try {
    std::vector<ff::Elem> c(cfg.c.begin(), cfg.c.end());
    fam::FamilySpec spec = fam::make_family(cfg.p, cfg.f, cfg.A, c);
    auto verdict = intlin::check_assumptions(spec.A, static_cast<std::int64_t>(spec.q), spec.alpha);
    rep["family"] = structure_json(spec, verdict);
    if (!assumptions_pass(spec, verdict)) {
      out.exit_code = kAssumption;
      out.message = "assumptions fail for q = " + std::to_string(spec.q);
      rep["exit_code"] = out.exit_code;
      rep["message"] = out.message;
      return out;
    }
    auto reps = intlin::kernel_reps(spec.A, static_cast<std::int64_t>(spec.q), spec.alpha);
    json table = json::array();
    for (std::size_t j = 0; j < reps.s.size(); ++j)
      table.push_back({{"s", reps.s[j]}, {"t_ij", reps.t_ij[j]}, {"t", reps.t[j]}, {"delta", static_cast<bool>(reps.delta[j])}});
    rep["family"]["kernel_reps"] = table;

    std::vector<ff::Elem> lambdas;
    if (cfg.lambda) {
      lambdas.push_back(static_cast<ff::Elem>(*cfg.lambda));
    } else {
      for (std::uint64_t l = 1; l < spec.q; ++l) lambdas.push_back(static_cast<ff::Elem>(l));
    }
    cg::Tower tower(spec.p, spec.f, cfg.budget.field_size);
    const unsigned slots = worker_slots(lambdas.size(), opt.threads);
    Context ctx{cfg, opt, spec, tower, tenth_power(10), ldexp(Real(1), -static_cast<int>(cfg.precision_bits / 2)),
                slots == 1 ? std::max(1u, opt.threads) : 1u};
    std::vector<LambdaResult> results(lambdas.size());
    parallel_chunks(lambdas.size(), opt.threads, [&](std::uint64_t b, std::uint64_t e, unsigned) {
      for (std::uint64_t i = b; i < e; ++i) {
        try {
          run_lambda(ctx, lambdas[i], results[i]);
        } catch (const Error& err) {
          results[i].error = err.kind();
          results[i].error_message = err.what();
          results[i].entry["error"] = {{"kind", err.name()}, {"message", err.what()}};
        }
      }
    });
    json entries = json::array();
    std::vector<std::string> mismatches;
    for (auto& r : results) {
      entries.push_back(r.entry);
      if (r.error && out.exit_code == kOk) {
        out.exit_code = exit_code_for(*r.error);
        out.message = r.error_message;
      }
      mismatches.insert(mismatches.end(), r.mismatches.begin(), r.mismatches.end());
    }
    rep["lambdas"] = entries;
    if (opt.command == "verify") rep["mismatches"] = mismatches;
    if (!mismatches.empty() && out.exit_code == kOk) {
      out.exit_code = kMismatch;
      out.message = "VerificationMismatch: " + mismatches.front();
    }
  } catch (const Error& err) {
    out.exit_code = exit_code_for(err.kind());
    out.message = err.what();
  }
  if (opt.timings) rep["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep["exit_code"] = out.exit_code;
  if (!out.message.empty()) rep["message"] = out.message;
  return out;
}

namespace {

bool is_scalar_list(const json& j) {
  for (const auto& v : j)
    if (v.is_structured() && !is_scalar_list(v)) return false;
  return j.is_array();
}

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string inline_list(const json& j) {
  std::string s = "[";
  bool first = true;
  for (const auto& v : j) {
    s += first ? "" : ", ";
    s += v.is_array() ? inline_list(v) : scalar(v);
    first = false;
  }
  return s + "]";
}

void render(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !is_scalar_list(v))) {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      } else {
        os << pad << k << ": " << (v.is_array() ? inline_list(v) : scalar(v)) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !is_scalar_list(v)) {
        os << pad << "-\n";
        render(os, v, indent + 2);
      } else {
        os << pad << "- " << (v.is_array() ? inline_list(v) : scalar(v)) << "\n";
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

}  // namespace hgzeta::cli
