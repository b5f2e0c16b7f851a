// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

// skewpbw: PBW checks, normal forms and classification for skew
// polynomial presentations.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewpbw/skewpbw.h"

namespace {

constexpr int kExitInputError = 2;

struct OptionsDeleter {
  void operator()(skp_options* o) const { skp_options_free(o); }
};
struct ReportDeleter {
  void operator()(skp_report* r) const { skp_report_free(r); }
};

std::optional<std::string> read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew PBW checker", "skewpbw"};
  app.require_subcommand(1);
  app.set_version_flag("--version", skp_version());

  bool json = false;
  std::vector<std::string> sets;
  bool oracle = false;
  std::size_t max_degree = 4;
  std::size_t node_cap = 1000000;
  bool trace = false;
  bool timing = false;
  app.add_flag("--json", json, "Print the JSON report");
  app.add_option("--set", sets, "Substitute a parameter, NAME=VALUE")
      ->take_all()
      ->allow_extra_args(false);
  app.add_flag("--oracle", oracle, "Cross-check with exhaustive reduction");
  app.add_option("--max-degree", max_degree, "Oracle word length bound")
      ->capture_default_str();
  app.add_option("--node-cap", node_cap, "Oracle search budget")
      ->capture_default_str();
  app.add_flag("--trace", trace, "Print the reduction trace");
  app.add_flag("--timing", timing, "Report wall-clock time");

  std::string file;
  std::string expr;
  bool verify = false;
  std::string substitute;

  auto* check = app.add_subcommand("check", "Decide whether the standard words form a PBW basis");
  check->fallthrough();
  check->add_option("file", file, "Presentation file, - for stdin")->required();

  auto* nf = app.add_subcommand("normal-form", "Reduce an expression to standard form");
  nf->fallthrough();
  nf->add_option("file", file, "Presentation file, - for stdin")->required();
  nf->add_option("--expr,expr", expr, "Expression to reduce")->required();

  auto* cls = app.add_subcommand("classify", "Classify a 3-generator PBW presentation");
  cls->fallthrough();
  cls->add_option("file", file, "Presentation file, - for stdin")->required();

  auto* derive = app.add_subcommand("derive-conditions",
                                    "Derive the ten overlap identities");
  derive->fallthrough();
  derive->add_flag("--verify", verify, "Compare with the tabulated identities");
  derive->add_option("--substitute", substitute,
                     "Evaluate the identities on a presentation file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }

  std::unique_ptr<skp_options, OptionsDeleter> opts(skp_options_new());
  for (const auto& s : sets) {
    if (skp_options_set_param(opts.get(), s.c_str()) != SKP_OK) {
      std::cerr << "error: --set " << s << ": " << skp_last_error_message() << "\n";
      return kExitInputError;
    }
  }
  skp_options_set_oracle(opts.get(), oracle);
  skp_options_set_max_degree(opts.get(), max_degree);
  skp_options_set_node_cap(opts.get(), node_cap);
  skp_options_set_trace(opts.get(), trace);
  skp_options_set_timing(opts.get(), timing);
  skp_options_set_verify(opts.get(), verify);

  std::string text;
  const bool needs_file = !derive->parsed();
  if (needs_file || !substitute.empty()) {
    const std::string& path = needs_file ? file : substitute;
    auto content = read_input(path);
    if (!content) {
      std::cerr << "error: cannot read " << path << "\n";
      return kExitInputError;
    }
    text = std::move(*content);
  }

  skp_report* raw = nullptr;
  skp_status status = SKP_OK;
  if (check->parsed()) {
    status = skp_check(text.c_str(), opts.get(), &raw);
  } else if (nf->parsed()) {
    status = skp_normal_form(text.c_str(), expr.c_str(), opts.get(), &raw);
  } else if (cls->parsed()) {
    status = skp_classify(text.c_str(), opts.get(), &raw);
  } else {
    if (!substitute.empty()) skp_options_set_substitute(opts.get(), text.c_str());
    status = skp_derive_conditions(opts.get(), &raw);
  }
  if (status != SKP_OK) {
    std::cerr << "error: " << skp_last_error_message() << "\n";
    return 3;
  }
  std::unique_ptr<skp_report, ReportDeleter> report(raw);
  const int code = skp_report_exit_code(report.get());
  if (json) {
    std::cout << skp_report_json(report.get(), 2) << "\n";
  } else if (code == kExitInputError) {
    std::cerr << skp_report_text(report.get());
  } else {
    std::cout << skp_report_text(report.get());
  }
  return code;
}
