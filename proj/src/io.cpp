/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include "vnnlib/io.hpp"

#include <fstream>
#include <sstream>

namespace vnnlib {

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw FileError("error reading '" + path.string() + "'");
  return buffer.str();
}

}  // namespace vnnlib
