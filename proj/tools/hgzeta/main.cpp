// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "config.hpp"
#include "pipeline.hpp"

namespace fs = std::filesystem;
using namespace hgzeta;

int main(int argc, char** argv) {
  CLI::App app{"Hypergeometric zeta factorization of monomial deformations"};
  cli::Options opt;
  std::string config_path, out_dir = ".", format = "text";
  std::optional<unsigned> r;
  app.add_option("command", opt.command, "analyze | count | zeta | unitroot | verify")
      ->required()
      ->check(CLI::IsMember({"analyze", "count", "zeta", "unitroot", "verify"}));
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--r", r, "largest extension degree, overrides r_max")->check(CLI::Range(1, 12));
  app.add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--out", out_dir, "directory for report.json and report.txt");
  app.add_option("--format", format, "stdout format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timings", opt.timings, "record wall-clock seconds in the report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kConfig;
  }

  cli::RunConfig cfg;
  try {
    cfg = cli::load_config(config_path);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return cli::kConfig;
  }
  if (r) cfg.r_max = *r;

  cli::Outcome out = cli::run(cfg, opt);
  const std::string json_text = out.report.dump(2) + "\n";
  const std::string text = cli::render_text(out.report);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  std::ofstream(fs::path(out_dir) / "report.json") << json_text;
  std::ofstream(fs::path(out_dir) / "report.txt") << text;
  std::cout << (format == "json" ? json_text : text);
  if (!out.message.empty()) std::cerr << out.message << "\n";
  return out.exit_code;
}
