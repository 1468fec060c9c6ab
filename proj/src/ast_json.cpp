/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include "vnnlib/ast_json.hpp"

namespace vnnlib {

using nlohmann::json;

namespace {

std::string_view arithKind(ArithExpr::Kind kind) {
  switch (kind) {
    case ArithExpr::Kind::Const: return "Const";
    case ArithExpr::Kind::Var: return "Var";
    case ArithExpr::Kind::Neg: return "Neg";
    case ArithExpr::Kind::Add: return "Add";
    case ArithExpr::Kind::Mul: return "Mul";
    case ArithExpr::Kind::Sub: return "Sub";
  }
  return "?";
}

json ioJson(std::string_view kind, const IoDecl& d) {
  return {{"kind", kind}, {"name", d.varName}, {"elementType", d.elementType},
          {"shape", d.shape.dims}, {"span", toJson(d.span)}};
}

}  // namespace

json toJson(const Span& span) {
  return {{"begin", span.begin}, {"end", span.end}, {"line", span.line}, {"column", span.column}};
}

json toJson(const ArithExpr& e) {
  json j = {{"kind", arithKind(e.kind)}};
  if (e.kind == ArithExpr::Kind::Const) {
    j["value"] = e.text;
  } else if (e.kind == ArithExpr::Kind::Var) {
    j["name"] = e.text;
    j["indices"] = e.indices ? json(*e.indices) : json(nullptr);
  } else {
    json children = json::array();
    for (const auto& operand : e.operands) children.push_back(toJson(operand));
    j["children"] = std::move(children);
  }
  j["span"] = toJson(e.span);
  return j;
}

json toJson(const BoolExpr& b) {
  json j;
  json children = json::array();
  if (b.kind == BoolExpr::Kind::Cmp) {
    j["kind"] = "Compare";
    j["op"] = toString(b.op);
    for (const auto& side : b.sides) children.push_back(toJson(side));
  } else {
    j["kind"] = b.kind == BoolExpr::Kind::And ? "And" : "Or";
    for (const auto& child : b.children) children.push_back(toJson(child));
  }
  j["children"] = std::move(children);
  j["span"] = toJson(b.span);
  return j;
}

json toJson(const NetworkDecl& n) {
  json j = {{"kind", "Network"}, {"name", n.name}};
  if (n.equiv) {
    j["equiv"] = {{"kind", keywordFor(n.equiv->kind)}, {"target", n.equiv->target}, {"span", toJson(n.equiv->span)}};
  } else {
    j["equiv"] = nullptr;
  }
  json inputs = json::array(), hidden = json::array(), outputs = json::array();
  for (const auto& d : n.inputs) inputs.push_back(ioJson("Input", d));
  for (const auto& h : n.hidden) {
    hidden.push_back({{"kind", "Hidden"}, {"name", h.varName}, {"elementType", h.elementType},
                      {"shape", h.shape.dims}, {"nodeOutput", h.nodeRef}, {"span", toJson(h.span)}});
  }
  for (const auto& d : n.outputs) outputs.push_back(ioJson("Output", d));
  j["inputs"] = std::move(inputs);
  j["hidden"] = std::move(hidden);
  j["outputs"] = std::move(outputs);
  j["span"] = toJson(n.span);
  return j;
}

json toJson(const Query& q) {
  json networks = json::array(), asserts = json::array();
  for (const auto& n : q.networks) networks.push_back(toJson(n));
  for (const auto& a : q.asserts) {
    asserts.push_back({{"kind", "Assert"}, {"children", json::array({toJson(a.expr)})}, {"span", toJson(a.span)}});
  }
  return {{"kind", "Query"},
          {"version", {{"major", q.version.major}, {"minor", q.version.minor}, {"span", toJson(q.version.span)}}},
          {"networks", std::move(networks)},
          {"asserts", std::move(asserts)}};
}

}  // namespace vnnlib
