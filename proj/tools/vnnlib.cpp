/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include <iostream>

#include "vnnlib/cli.hpp"

int main(int argc, char** argv) { return vnnlib::cli::runMain(argc, argv, std::cout, std::cerr); }
