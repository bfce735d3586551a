// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "config.hpp"

#include <fstream>

#include "hgzeta/errors.hpp"
#include "hgzeta/ffield.hpp"

namespace hgzeta::cli {

using nlohmann::json;

namespace {

template <class T>
T get_uint(const json& j, const char* key, T lo, T hi) {
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw ConfigError(std::string(key) + " must be a nonnegative integer");
  auto x = v.get<std::uint64_t>();
  if (x < static_cast<std::uint64_t>(lo) || x > static_cast<std::uint64_t>(hi)) {
    throw ConfigError(std::string(key) + " = " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  return static_cast<T>(x);
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ConfigError("unknown field '" + k + "' in " + where);
}

}  // namespace

RunConfig parse_config(const json& j) {
  check_keys(j,
             {"p", "q", "n", "A", "c", "lambda", "r_max", "precision_bits", "padic_precision", "oracles", "budget"},
             "config");
  for (const char* key : {"p", "n", "A", "c"})
    if (!j.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
  RunConfig cfg;
  try {
    cfg.p = get_uint<std::uint32_t>(j, "p", 2, 1u << 20);
    if (!ff::is_prime(cfg.p)) throw NotPrime(std::to_string(cfg.p) + " is not prime");
    cfg.q = j.contains("q") ? get_uint<std::uint64_t>(j, "q", 2, std::uint64_t{1} << 24) : cfg.p;
    cfg.f = 0;
    for (std::uint64_t v = cfg.q; v > 1; v /= cfg.p, ++cfg.f)
      if (v % cfg.p != 0) throw ConfigError("q = " + std::to_string(cfg.q) + " is not a power of p");
    cfg.n = get_uint<int>(j, "n", 2, 8);
    const json& A = j.at("A");
    const auto m = static_cast<std::size_t>(cfg.n) + 1;
    if (!A.is_array() || A.size() != m) throw ConfigError("A must have n+1 rows");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : A) {
      if (!row.is_array() || row.size() != m) throw ConfigError("A must be (n+1)x(n+1)");
      std::vector<std::int64_t> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) throw ConfigError("A entries must be integers");
        r.push_back(v.get<std::int64_t>());
      }
      rows.push_back(r);
    }
    cfg.A = intlin::IntMatrix::from_rows(rows);
    const json& c = j.at("c");
    if (!c.is_array() || c.size() != m) throw ConfigError("c must have n+1 entries");
    for (const auto& v : c) {
      if (!v.is_number_integer()) throw ConfigError("c entries must be integers");
      std::int64_t x = v.get<std::int64_t>();
      if (cfg.f == 1) {
        x %= static_cast<std::int64_t>(cfg.p);
        if (x < 0) x += cfg.p;
      }
      if (x <= 0 || static_cast<std::uint64_t>(x) >= cfg.q) throw ConfigError("c entries must be nonzero elements of F_q");
      cfg.c.push_back(x);
    }
    if (j.contains("lambda")) {
      const json& l = j.at("lambda");
      if (l.is_string()) {
        if (l.get<std::string>() != "all") throw ConfigError("lambda must be an integer or \"all\"");
      } else {
        std::uint64_t v = get_uint<std::uint64_t>(j, "lambda", 1, cfg.q - 1);
        if (cfg.f == 1) v %= cfg.p;
        if (v == 0) throw ConfigError("lambda must be nonzero in F_q");
        cfg.lambda = v;
      }
    }
    if (j.contains("r_max")) cfg.r_max = get_uint<unsigned>(j, "r_max", 1, 12);
    if (j.contains("precision_bits")) cfg.precision_bits = get_uint<unsigned>(j, "precision_bits", 64, 256);
    if (j.contains("padic_precision")) cfg.padic_precision = get_uint<unsigned>(j, "padic_precision", 1, 30);
    if (j.contains("oracles")) {
      cfg.oracles.clear();
      for (const auto& o : j.at("oracles")) {
        std::string name = o.get<std::string>();
        if (name != "brute" && name != "delsarte" && name != "hgf") throw ConfigError("unknown oracle '" + name + "'");
        cfg.oracles.insert(name);
      }
      if (cfg.oracles.empty()) throw ConfigError("oracles must not be empty");
    }
    if (j.contains("budget")) {
      const json& b = j.at("budget");
      check_keys(b, {"points", "field_size", "zeta_level_size", "smoothness_points", "smoothness_r"}, "budget");
      const std::uint64_t big = std::uint64_t{1} << 50;
      if (b.contains("points")) cfg.budget.points = get_uint<std::uint64_t>(b, "points", 1, big);
      if (b.contains("field_size")) cfg.budget.field_size = get_uint<std::uint64_t>(b, "field_size", 2, ff::kDefaultCap);
      if (b.contains("zeta_level_size"))
        cfg.budget.zeta_level_size = get_uint<std::uint64_t>(b, "zeta_level_size", 2, ff::kDefaultCap);
      if (b.contains("smoothness_points")) cfg.budget.smoothness_points = get_uint<std::uint64_t>(b, "smoothness_points", 1, big);
      if (b.contains("smoothness_r")) cfg.budget.smoothness_r = get_uint<unsigned>(b, "smoothness_r", 0, 12);
    }
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return parse_config(j);
}

json to_json(const RunConfig& cfg) {
  json A = json::array();
  for (std::size_t i = 0; i < cfg.A.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < cfg.A.cols(); ++k) row.push_back(cfg.A.at64(i, k));
    A.push_back(row);
  }
  json out{{"p", cfg.p},
           {"q", cfg.q},
           {"n", cfg.n},
           {"A", A},
           {"c", cfg.c},
           {"r_max", cfg.r_max},
           {"precision_bits", cfg.precision_bits},
           {"padic_precision", cfg.padic_precision},
           {"oracles", cfg.oracles}};
  if (cfg.lambda)
    out["lambda"] = *cfg.lambda;
  else
    out["lambda"] = "all";
  out["budget"] = {{"points", cfg.budget.points},
                   {"field_size", cfg.budget.field_size},
                   {"zeta_level_size", cfg.budget.zeta_level_size},
                   {"smoothness_points", cfg.budget.smoothness_points},
                   {"smoothness_r", cfg.budget.smoothness_r}};
  return out;
}

}  // namespace hgzeta::cli
