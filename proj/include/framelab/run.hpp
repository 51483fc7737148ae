// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "framelab/geometry.hpp"

namespace framelab {

struct CliOptions {
  std::string out_dir = "out";
  bool assert_mode = false;
  std::optional<std::uint32_t> seed;
  std::optional<Geometry> geometry;
};

/// Thrown for malformed configuration (exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Executes one CLI command against a parsed JSON config.  Returns the exit
/// code: 0 success, 1 certificate violation under assert mode, 2 malformed
/// config, 3 numerical failure.
int run_command(const std::string& command, const nlohmann::json& config,
                const CliOptions& opts);

/// Full CLI entry point (argument parsing + config loading + run_command).
int run_cli(int argc, const char* const* argv);

}  // namespace framelab
