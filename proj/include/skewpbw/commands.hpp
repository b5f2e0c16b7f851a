// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

// The four user-facing commands. Each returns a Report carrying an exit code
// and both a text and a JSON rendering; no command throws.
//
// Exit codes: 0 success / PBW, 1 mathematically negative verdict,
// 2 input error, 3 indeterminate.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "skewpbw/coeff.hpp"

namespace skewpbw {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kExitSuccess = 0,
  kExitNegative = 1,
  kExitInputError = 2,
  kExitIndeterminate = 3,
};

struct CommandOptions {
  std::vector<std::pair<std::string, Rational>> sets;  // --set NAME=VALUE
  bool oracle = false;
  std::size_t max_degree = 4;
  std::size_t node_cap = 1'000'000;
  bool trace = false;
  bool timing = false;
  bool verify = false;                          // derive-conditions
  std::optional<std::string> substitute_text;   // derive-conditions
};

struct Report {
  int exit_code = kExitSuccess;
  nlohmann::ordered_json json;
  std::string text;
};

Report cmd_check(std::string_view presentation, const CommandOptions& opts);
Report cmd_normal_form(std::string_view presentation, std::string_view expr,
                       const CommandOptions& opts);
Report cmd_classify(std::string_view presentation, const CommandOptions& opts);
Report cmd_derive_conditions(const CommandOptions& opts);

/// Parses "NAME=VALUE" with a rational VALUE. Throws Error(Argument).
std::pair<std::string, Rational> parse_assignment(std::string_view text);

}  // namespace skewpbw
