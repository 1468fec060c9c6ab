/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include "vnnlib/report.hpp"

#include "vnnlib/ast_json.hpp"

namespace vnnlib::report {

using nlohmann::json;

json ok(std::string_view command) { return {{"command", command}, {"status", "ok"}}; }

json syntaxError(std::string_view command, const SyntaxError& error) {
  return {{"command", command},
          {"status", "parse-error"},
          {"kind", error.kindName()},
          {"message", error.what()},
          {"span", toJson(error.span())}};
}

json typeError(std::string_view command, const TypeError& error) {
  return {{"command", command},
          {"status", "type-error"},
          {"code", codeName(error.code())},
          {"message", error.what()},
          {"span", toJson(error.span())}};
}

json formatError(std::string_view command, std::string_view message) {
  return {{"command", command}, {"status", "format-error"}, {"message", message}};
}

json verdict(const Verdict& verdict) {
  json assertions = json::array();
  for (std::size_t i = 0; i < verdict.perAssertion.size(); ++i) {
    assertions.push_back({{"index", i}, {"span", toJson(verdict.perAssertion[i].first)},
                          {"holds", verdict.perAssertion[i].second}});
  }
  return {{"command", "eval"},
          {"status", verdict.satisfied ? "satisfied" : "violated"},
          {"assertions", std::move(assertions)}};
}

json searchFound(std::uint64_t samples, json witness) {
  return {{"command", "search"}, {"status", "found"}, {"samples", samples}, {"witness", std::move(witness)}};
}

json searchUnknown(std::uint64_t samples) {
  return {{"command", "search"}, {"status", "unknown"}, {"samples", samples}, {"bestEffort", true}};
}

}  // namespace vnnlib::report
