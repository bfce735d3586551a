// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgzeta/intlin.hpp"

namespace hgzeta::cli {

struct Budget {
  std::uint64_t points = 50'000'000;          // brute-force projective points per count
  std::uint64_t field_size = 200'000;         // largest q^r given a Gauss table
  std::uint64_t zeta_level_size = 200'000;    // largest q^r used to fit zeta factors
  std::uint64_t smoothness_points = 5'000'000;
  unsigned smoothness_r = 3;
};

struct RunConfig {
  std::uint32_t p = 0;
  std::uint64_t q = 0;
  unsigned f = 1;
  int n = 0;
  intlin::IntMatrix A;
  std::vector<std::int64_t> c;
  std::optional<std::uint64_t> lambda;  // empty: sweep F_q^x
  unsigned r_max = 3;
  unsigned precision_bits = 256;
  unsigned padic_precision = 6;
  std::set<std::string> oracles{"brute", "delsarte", "hgf"};
  Budget budget;
};

// Throws ConfigError on schema violations.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

nlohmann::json to_json(const RunConfig& cfg);

}  // namespace hgzeta::cli
