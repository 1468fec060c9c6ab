/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

namespace vnnlib {

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Whole file as bytes; throws FileError.
std::string readFile(const std::filesystem::path& path);

}  // namespace vnnlib
