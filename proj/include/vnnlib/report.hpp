/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

// Machine-readable reports shared by the CLI's --json mode and embedders.
// Every report is an object with a "status" field:
//   ok | satisfied | violated | found | unknown | parse-error | type-error | format-error

#pragma once

#include <string_view>

#include "json.hpp"
#include "vnnlib/evaluator.hpp"
#include "vnnlib/syntax.hpp"
#include "vnnlib/type_error.hpp"

namespace vnnlib::report {

nlohmann::json ok(std::string_view command);
nlohmann::json syntaxError(std::string_view command, const SyntaxError& error);
nlohmann::json typeError(std::string_view command, const TypeError& error);
nlohmann::json formatError(std::string_view command, std::string_view message);
nlohmann::json verdict(const Verdict& verdict);
nlohmann::json searchFound(std::uint64_t samples, nlohmann::json witness);
nlohmann::json searchUnknown(std::uint64_t samples);

}  // namespace vnnlib::report
