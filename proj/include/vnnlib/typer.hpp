/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

// Typing judgements for queries, written once against the NetworkTheory
// concept. Every rejection throws a TypeError; the first error in source
// order wins.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vnnlib/ast.hpp"
#include "vnnlib/theory.hpp"
#include "vnnlib/type_error.hpp"

namespace vnnlib {

/// Γ: network declarations in declaration order, plus an index of every
/// declared variable (names are unique across all networks).
class TypingContext {
 public:
  enum class Role { Input, Hidden, Output };

  struct Variable {
    std::size_t network;  // index into networks()
    Role role;
    std::string elementType;
    Shape shape;
    Span span;
  };

  const std::vector<NetworkDecl>& networks() const { return networks_; }
  std::size_t size() const { return networks_.size(); }

  const NetworkDecl* find(std::string_view name) const;
  const Variable* variable(std::string_view name) const;

  /// Appends `decl`; the caller has already checked it.
  void insert(const NetworkDecl& decl);

 private:
  std::vector<NetworkDecl> networks_;
  std::map<std::string, std::size_t, std::less<>> byName_;
  std::map<std::string, Variable, std::less<>> variables_;
};

/// Positional model type of a declaration's inputs and outputs.
ModelType modelTypeOf(const NetworkDecl& decl);

template <class T>
using ModelMap = std::map<std::string, typename T::Model, std::less<>>;

template <class T>
using AssignmentMap = std::map<std::string, typename T::Tensor, std::less<>>;

namespace detail {

[[noreturn]] void fail(TypeErrorCode code, const Span& span, const std::string& message);

// Phase one of arithmetic typing: the Variable rule on every occurrence,
// left to right, appending each occurrence's element type.
void collectVariables(const TypingContext& ctx, const ArithExpr& expr,
                      std::vector<std::pair<std::string, Span>>& found);

template <NetworkTheory T>
void checkConstants(const ArithExpr& expr, const std::string& type, const T& theory) {
  if (expr.kind == ArithExpr::Kind::Const) {
    if (!theory.judgeElement(ElementLiteral{expr.text}, type)) {
      fail(TypeErrorCode::BadConstant, expr.span, "constant " + expr.text + " is not a valid " + type);
    }
    return;
  }
  for (const auto& operand : expr.operands) checkConstants(operand, type, theory);
}

std::optional<std::string> unifyVariables(const std::vector<std::pair<std::string, Span>>& found);

}  // namespace detail

/// Rules NEq / NIso for `decl` against the context so far.
void checkEquiv(const TypingContext& ctx, const NetworkDecl& decl);

/// Folds the declarations into `ctx` (rules NetworkNil / NetworkCons).
template <NetworkTheory T>
TypingContext buildContext(const std::vector<NetworkDecl>& networks, const T& theory, TypingContext ctx = {}) {
  for (const auto& decl : networks) {
    if (ctx.find(decl.name) != nullptr) {
      detail::fail(TypeErrorCode::DuplicateName, decl.span, "network '" + decl.name + "' is already declared");
    }
    checkEquiv(ctx, decl);

    std::map<std::string_view, bool, std::less<>> local;
    auto checkVar = [&](const std::string& name, const std::string& elementType, const Span& span) {
      if (!theory.hasElementType(elementType)) {
        detail::fail(TypeErrorCode::UnknownElementType, span,
                     "element type '" + elementType + "' is not provided by the " + std::string(theory.name()) +
                         " theory");
      }
      if (ctx.variable(name) != nullptr || !local.emplace(name, true).second) {
        detail::fail(TypeErrorCode::DuplicateName, span, "variable '" + name + "' is already declared");
      }
    };
    for (const auto& d : decl.inputs) checkVar(d.varName, d.elementType, d.span);
    for (const auto& d : decl.hidden) checkVar(d.varName, d.elementType, d.span);
    for (const auto& d : decl.outputs) checkVar(d.varName, d.elementType, d.span);
    ctx.insert(decl);
  }
  return ctx;
}

/// Element type of an arithmetic expression; nullopt when it contains no
/// variable (only a comparison can report that).
template <NetworkTheory T>
std::optional<std::string> typeArith(const TypingContext& ctx, const ArithExpr& expr, const T& theory) {
  std::vector<std::pair<std::string, Span>> found;
  detail::collectVariables(ctx, expr, found);
  auto type = detail::unifyVariables(found);
  if (type) detail::checkConstants(expr, *type, theory);
  return type;
}

/// Joint typing of both sides of a comparison.
template <NetworkTheory T>
std::string typeComparison(const TypingContext& ctx, const BoolExpr& cmp, const T& theory) {
  std::vector<std::pair<std::string, Span>> found;
  detail::collectVariables(ctx, cmp.lhs(), found);
  detail::collectVariables(ctx, cmp.rhs(), found);
  auto type = detail::unifyVariables(found);
  if (!type) {
    detail::fail(TypeErrorCode::UntypableComparison, cmp.span, "comparison contains no variables");
  }
  detail::checkConstants(cmp.lhs(), *type, theory);
  detail::checkConstants(cmp.rhs(), *type, theory);
  return *type;
}

template <NetworkTheory T>
void typeBool(const TypingContext& ctx, const BoolExpr& expr, const T& theory) {
  if (expr.kind == BoolExpr::Kind::Cmp) {
    typeComparison(ctx, expr, theory);
    return;
  }
  for (const auto& child : expr.children) typeBool(ctx, child, theory);
}

template <NetworkTheory T>
TypingContext typeQuery(const Query& query, const T& theory) {
  TypingContext ctx = buildContext(query.networks, theory);
  for (const auto& assertion : query.asserts) typeBool(ctx, assertion.expr, theory);
  return ctx;
}

/// Model-compatibility judgements: every declaration bound, equivalences
/// honoured, model types and hidden node outputs as declared.
template <NetworkTheory T>
void checkModels(const Query& query, const ModelMap<T>& models, const T& theory) {
  for (const auto& decl : query.networks) {
    auto it = models.find(decl.name);
    if (it == models.end()) {
      detail::fail(TypeErrorCode::UnknownNetwork, decl.span, "no model bound to network '" + decl.name + "'");
    }
    const auto& model = it->second;

    if (decl.equiv) {
      auto target = models.find(decl.equiv->target);
      if (target == models.end()) {
        detail::fail(TypeErrorCode::UnknownNetwork, decl.equiv->span,
                     "no model bound to network '" + decl.equiv->target + "'");
      }
      if (decl.equiv->kind == Equiv::Kind::EqualTo && !theory.sameArtifact(model, target->second)) {
        detail::fail(TypeErrorCode::ModelNotEqual, decl.equiv->span,
                     "models of '" + decl.name + "' and '" + decl.equiv->target + "' are not the same artifact");
      }
      if (decl.equiv->kind == Equiv::Kind::IsomorphicTo && !theory.judgeIsomorphic(model, target->second)) {
        detail::fail(TypeErrorCode::ModelNotIsomorphic, decl.equiv->span,
                     "models of '" + decl.name + "' and '" + decl.equiv->target + "' are not isomorphic");
      }
    }

    if (!theory.judgeModel(model, modelTypeOf(decl))) {
      detail::fail(TypeErrorCode::ModelTypeMismatch, decl.span,
                   "model bound to '" + decl.name + "' does not match the declared inputs and outputs");
    }

    for (const auto& h : decl.hidden) {
      if (!theory.judgeNodeOutput(model, typename T::NodeOutput(h.nodeRef), TensorType{h.elementType, h.shape})) {
        detail::fail(TypeErrorCode::HiddenNodeMissing, h.span,
                     "model bound to '" + decl.name + "' has no node output \"" + h.nodeRef + "\" of type " +
                         toString(TensorType{h.elementType, h.shape}));
      }
    }
  }
  for (const auto& [name, model] : models) {
    bool declared = false;
    for (const auto& decl : query.networks) declared = declared || decl.name == name;
    if (!declared) detail::fail(TypeErrorCode::UnknownNetwork, {}, "model bound to undeclared network '" + name + "'");
  }
}

template <NetworkTheory T>
void checkAssignment(const Query& query, const AssignmentMap<T>& assignment, const T& theory) {
  for (const auto& decl : query.networks) {
    for (const auto& input : decl.inputs) {
      auto it = assignment.find(input.varName);
      if (it == assignment.end()) {
        detail::fail(TypeErrorCode::AssignmentMissing, input.span, "no value assigned to input '" + input.varName + "'");
      }
      TensorType type{input.elementType, input.shape};
      if (!theory.judgeTensor(it->second, type)) {
        detail::fail(TypeErrorCode::AssignmentTypeMismatch, input.span,
                     "value assigned to '" + input.varName + "' is not a " + toString(type));
      }
    }
  }
  for (const auto& [name, tensor] : assignment) {
    bool declared = false;
    for (const auto& decl : query.networks) {
      for (const auto& input : decl.inputs) declared = declared || input.varName == name;
    }
    if (!declared) detail::fail(TypeErrorCode::UnknownVariable, {}, "'" + name + "' is not a declared input");
  }
}

}  // namespace vnnlib
