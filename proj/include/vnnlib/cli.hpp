/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vnnlib::cli {

enum ExitCode : int {
  kSuccess = 0,     // ok, satisfied, found
  kNegative = 1,    // violated, unknown
  kTypeError = 2,
  kParseError = 3,
  kFormatError = 4,  // I/O, model or assignment format, bad invocation
};

struct Invocation {
  std::string command;  // parse | check | eval | search | version
  std::string queryPath;
  std::vector<std::string> networks;  // name=path
  std::optional<std::string> assignmentPath;
  bool real = false;
  bool astJson = false;
  bool json = false;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
};

inline constexpr const char* kVersion = "0.1.0";

int runCommand(const Invocation& invocation, std::ostream& out, std::ostream& err);

/// Parses argv and runs the command.
int runMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vnnlib::cli
