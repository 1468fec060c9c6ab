/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include "vnnlib/typer.hpp"

namespace vnnlib {

const NetworkDecl* TypingContext::find(std::string_view name) const {
  auto it = byName_.find(name);
  return it == byName_.end() ? nullptr : &networks_[it->second];
}

const TypingContext::Variable* TypingContext::variable(std::string_view name) const {
  auto it = variables_.find(name);
  return it == variables_.end() ? nullptr : &it->second;
}

void TypingContext::insert(const NetworkDecl& decl) {
  std::size_t index = networks_.size();
  networks_.push_back(decl);
  byName_.emplace(decl.name, index);
  for (const auto& d : decl.inputs) variables_.emplace(d.varName, Variable{index, Role::Input, d.elementType, d.shape, d.span});
  for (const auto& d : decl.hidden) variables_.emplace(d.varName, Variable{index, Role::Hidden, d.elementType, d.shape, d.span});
  for (const auto& d : decl.outputs) variables_.emplace(d.varName, Variable{index, Role::Output, d.elementType, d.shape, d.span});
}

ModelType modelTypeOf(const NetworkDecl& decl) {
  ModelType type;
  for (const auto& d : decl.inputs) type.inputs.push_back({d.elementType, d.shape});
  for (const auto& d : decl.outputs) type.outputs.push_back({d.elementType, d.shape});
  return type;
}

namespace detail {

void fail(TypeErrorCode code, const Span& span, const std::string& message) { throw TypeError(code, span, message); }

namespace {

void compareIo(const std::vector<IoDecl>& mine, const std::vector<IoDecl>& theirs, bool checkTypes,
               const NetworkDecl& decl, std::string_view what) {
  if (mine.size() != theirs.size()) {
    fail(TypeErrorCode::ShapeMismatch, decl.span,
         "network '" + decl.name + "' declares " + std::to_string(mine.size()) + " " + std::string(what) +
             "s but '" + decl.equiv->target + "' declares " + std::to_string(theirs.size()));
  }
  for (std::size_t i = 0; i < mine.size(); ++i) {
    if (mine[i].shape != theirs[i].shape) {
      fail(TypeErrorCode::ShapeMismatch, mine[i].span,
           std::string(what) + " " + std::to_string(i) + " has shape " + toString(mine[i].shape) + " but '" +
               decl.equiv->target + "' declares " + toString(theirs[i].shape));
    }
    if (checkTypes && mine[i].elementType != theirs[i].elementType) {
      fail(TypeErrorCode::ElementTypeMismatch, mine[i].span,
           std::string(what) + " " + std::to_string(i) + " has element type " + mine[i].elementType + " but '" +
               decl.equiv->target + "' declares " + theirs[i].elementType);
    }
  }
}

}  // namespace

std::optional<std::string> unifyVariables(const std::vector<std::pair<std::string, Span>>& found) {
  if (found.empty()) return std::nullopt;
  for (const auto& [type, span] : found) {
    if (type != found.front().first) {
      fail(TypeErrorCode::MixedTypes, span,
           "operand of type " + type + " mixed with operand of type " + found.front().first);
    }
  }
  return found.front().first;
}

void collectVariables(const TypingContext& ctx, const ArithExpr& expr, std::vector<std::pair<std::string, Span>>& found) {
  if (expr.kind == ArithExpr::Kind::Const) return;
  if (expr.kind != ArithExpr::Kind::Var) {
    for (const auto& operand : expr.operands) collectVariables(ctx, operand, found);
    return;
  }
  const auto* var = ctx.variable(expr.text);
  if (var == nullptr) fail(TypeErrorCode::UnknownVariable, expr.span, "'" + expr.text + "' is not declared");

  std::vector<std::uint64_t> none;
  const auto& indices = expr.indices ? *expr.indices : none;
  if (indices.size() != var->shape.rank()) {
    fail(TypeErrorCode::RankMismatch, expr.span,
         "'" + expr.text + "' has shape " + toString(var->shape) + " but is indexed with " +
             std::to_string(indices.size()) + " indices");
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= var->shape.dims[i]) {
      fail(TypeErrorCode::IndexOutOfBounds, expr.span,
           "index " + std::to_string(indices[i]) + " at position " + std::to_string(i) + " is out of bounds for '" +
               expr.text + "' of shape " + toString(var->shape));
    }
  }
  found.emplace_back(var->elementType, expr.span);
}

}  // namespace detail

void checkEquiv(const TypingContext& ctx, const NetworkDecl& decl) {
  if (!decl.equiv) return;
  const Equiv& equiv = *decl.equiv;
  const NetworkDecl* target = ctx.find(equiv.target);
  if (target == nullptr) {
    detail::fail(TypeErrorCode::UnknownNetwork, equiv.span, "network '" + equiv.target + "' is not declared before '" + decl.name + "'");
  }
  if (target->equiv) {
    detail::fail(TypeErrorCode::EquivChain, equiv.span,
                 "'" + equiv.target + "' itself declares " + std::string(keywordFor(target->equiv->kind)) + " '" +
                     target->equiv->target + "'");
  }
  bool exact = equiv.kind == Equiv::Kind::EqualTo;
  detail::compareIo(decl.inputs, target->inputs, exact, decl, "input");
  detail::compareIo(decl.outputs, target->outputs, exact, decl, "output");
  if (!exact) return;

  // Hidden declarations naming the same node (or the same variable) must agree.
  for (const auto& mine : decl.hidden) {
    for (const auto& theirs : target->hidden) {
      if (mine.varName != theirs.varName && mine.nodeRef != theirs.nodeRef) continue;
      if (mine.shape != theirs.shape) {
        detail::fail(TypeErrorCode::ShapeMismatch, mine.span,
                     "hidden '" + mine.varName + "' has shape " + toString(mine.shape) + " but '" + equiv.target +
                         "' declares " + toString(theirs.shape));
      }
      if (mine.elementType != theirs.elementType) {
        detail::fail(TypeErrorCode::ElementTypeMismatch, mine.span,
                     "hidden '" + mine.varName + "' has element type " + mine.elementType + " but '" + equiv.target +
                         "' declares " + theirs.elementType);
      }
    }
  }
}

}  // namespace vnnlib
