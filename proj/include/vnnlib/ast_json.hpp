/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#pragma once

#include "json.hpp"

#include "vnnlib/ast.hpp"

namespace vnnlib {

// Stable JSON tree for tooling: every node is an object with a "kind" tag,
// its payload fields, child nodes, and a "span" {begin, end, line, column}.
nlohmann::json toJson(const Span& span);
nlohmann::json toJson(const ArithExpr& expr);
nlohmann::json toJson(const BoolExpr& expr);
nlohmann::json toJson(const NetworkDecl& decl);
nlohmann::json toJson(const Query& query);

}  // namespace vnnlib
