// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <json.hpp>

#include "config.hpp"
#include "hgzeta/errors.hpp"

namespace hgzeta::cli {

enum ExitCode { kOk = 0, kConfig = 2, kAssumption = 3, kMismatch = 4, kBudget = 5 };

int exit_code_for(ErrorKind kind);

struct Options {
  std::string command;  // analyze, count, zeta, unitroot, verify
  unsigned threads = 1;
  bool timings = false;
};

struct Outcome {
  nlohmann::json report;
  int exit_code = kOk;
  std::string message;
};

// Never throws hgzeta::Error; failures land in the report and the exit code.
Outcome run(const RunConfig& cfg, const Options& opt);

std::string render_text(const nlohmann::json& report);

}  // namespace hgzeta::cli
