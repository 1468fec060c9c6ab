/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

// Witness evaluation: the environment built from models and an input
// assignment, the meaning of arithmetic and boolean expressions, and a
// seeded best-effort witness search. Callers type-check first.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vnnlib/ast.hpp"
#include "vnnlib/theory.hpp"
#include "vnnlib/typer.hpp"

namespace vnnlib {

/// Δ: every declared variable's tensor, plus its element type.
template <NetworkTheory T>
struct Environment {
  struct Entry {
    std::string elementType;
    MathTensor<typename T::Scalar> tensor;
  };
  std::map<std::string, Entry, std::less<>> entries;

  const Entry& at(std::string_view name) const {
    auto it = entries.find(name);
    if (it == entries.end()) throw std::logic_error("variable '" + std::string(name) + "' is not in the environment");
    return it->second;
  }
};

struct Verdict {
  bool satisfied = true;
  std::vector<std::pair<Span, bool>> perAssertion;
};

template <NetworkTheory T>
Environment<T> buildEnvironment(const std::vector<NetworkDecl>& networks, const ModelMap<T>& models,
                                const AssignmentMap<T>& assignment, const T& theory) {
  using Scalar = typename T::Scalar;
  Environment<T> env;
  for (const auto& decl : networks) {
    const auto& model = models.at(decl.name);
    std::vector<MathTensor<Scalar>> inputs;
    for (const auto& d : decl.inputs) {
      inputs.push_back(theory.semTensor(assignment.at(d.varName)));
      env.entries.emplace(d.varName, typename Environment<T>::Entry{d.elementType, inputs.back()});
    }
    for (const auto& h : decl.hidden) {
      auto tensor = theory.semModel(model, inputs, typename T::NodeOutput(h.nodeRef));
      env.entries.emplace(h.varName, typename Environment<T>::Entry{h.elementType, std::move(tensor)});
    }
    auto outputs = theory.networkOutputs(model);
    if (outputs.size() != decl.outputs.size()) throw std::logic_error("model output count differs from declaration");
    for (std::size_t i = 0; i < decl.outputs.size(); ++i) {
      auto tensor = theory.semModel(model, inputs, outputs[i]);
      env.entries.emplace(decl.outputs[i].varName,
                          typename Environment<T>::Entry{decl.outputs[i].elementType, std::move(tensor)});
    }
  }
  return env;
}

/// Value of `expr` at element type `type`.
template <NetworkTheory T>
typename T::Scalar evalArith(const ArithExpr& expr, const Environment<T>& env, std::string_view type, const T& theory) {
  using Scalar = typename T::Scalar;
  auto sum = [&](std::size_t first) {
    Scalar acc = evalArith(expr.operands[first], env, type, theory);
    for (std::size_t i = first + 1; i < expr.operands.size(); ++i) {
      acc = theory.add(type, acc, evalArith(expr.operands[i], env, type, theory));
    }
    return acc;
  };
  switch (expr.kind) {
    case ArithExpr::Kind::Const:
      return theory.semElement(ElementLiteral{expr.text}, type);
    case ArithExpr::Kind::Var: {
      const auto& tensor = env.at(expr.text).tensor;
      std::vector<std::uint64_t> none;
      return tensor.values.at(flatIndex(tensor.shape, expr.indices ? *expr.indices : none));
    }
    case ArithExpr::Kind::Neg:
      return theory.negate(type, evalArith(expr.operands[0], env, type, theory));
    case ArithExpr::Kind::Add:
      return sum(0);
    case ArithExpr::Kind::Mul: {
      Scalar acc = evalArith(expr.operands[0], env, type, theory);
      for (std::size_t i = 1; i < expr.operands.size(); ++i) {
        acc = theory.multiply(type, acc, evalArith(expr.operands[i], env, type, theory));
      }
      return acc;
    }
    case ArithExpr::Kind::Sub:
      // e1 - e2 - ... - en  means  e1 + (-(e2 + ... + en))
      return theory.add(type, evalArith(expr.operands[0], env, type, theory), theory.negate(type, sum(1)));
  }
  throw std::logic_error("unknown arithmetic node");
}

namespace detail {

template <NetworkTheory T>
const std::string* firstVariableType(const ArithExpr& expr, const Environment<T>& env) {
  if (expr.kind == ArithExpr::Kind::Var) return &env.at(expr.text).elementType;
  for (const auto& operand : expr.operands) {
    if (const auto* type = firstVariableType(operand, env)) return type;
  }
  return nullptr;
}

}  // namespace detail

template <NetworkTheory T>
bool evalBool(const BoolExpr& expr, const Environment<T>& env, const T& theory) {
  if (expr.kind == BoolExpr::Kind::Cmp) {
    const std::string* type = detail::firstVariableType(expr.lhs(), env);
    if (type == nullptr) type = detail::firstVariableType(expr.rhs(), env);
    if (type == nullptr) throw std::logic_error("comparison without variables reached the evaluator");
    return theory.compare(expr.op, *type, evalArith(expr.lhs(), env, *type, theory),
                          evalArith(expr.rhs(), env, *type, theory));
  }
  bool conjunction = expr.kind == BoolExpr::Kind::And;
  bool result = conjunction;
  for (const auto& child : expr.children) {
    bool value = evalBool(child, env, theory);
    result = conjunction ? (result && value) : (result || value);
  }
  return result;
}

template <NetworkTheory T>
Verdict evalQuery(const Query& query, const ModelMap<T>& models, const AssignmentMap<T>& assignment, const T& theory) {
  Environment<T> env = buildEnvironment(query.networks, models, assignment, theory);
  Verdict verdict;
  for (const auto& assertion : query.asserts) {
    bool holds = evalBool(assertion.expr, env, theory);
    verdict.perAssertion.emplace_back(assertion.span, holds);
    verdict.satisfied = verdict.satisfied && holds;
  }
  return verdict;
}

template <NetworkTheory T>
struct SearchResult {
  std::optional<AssignmentMap<T>> witness;
  std::uint64_t samples = 0;  // candidates evaluated
};

namespace detail {

struct Bounds {
  std::optional<double> lower, upper;
};

using BoundTable = std::map<std::pair<std::string, std::uint64_t>, Bounds>;

// Bounds from comparisons of one indexed input element against a constant,
// found at the top level of an assertion or under a top-level `and`.
template <SamplableTheory T>
void harvestBounds(const BoolExpr& expr, const TypingContext& ctx, const T& theory, BoundTable& table) {
  if (expr.kind == BoolExpr::Kind::And) {
    for (const auto& child : expr.children) harvestBounds(child, ctx, theory, table);
    return;
  }
  if (expr.kind != BoolExpr::Kind::Cmp) return;
  const ArithExpr* var = &expr.lhs();
  const ArithExpr* constant = &expr.rhs();
  bool varOnLeft = true;
  if (var->kind != ArithExpr::Kind::Var) {
    std::swap(var, constant);
    varOnLeft = false;
  }
  if (var->kind != ArithExpr::Kind::Var || constant->kind != ArithExpr::Kind::Const) return;
  const auto* info = ctx.variable(var->text);
  if (info == nullptr || info->role != TypingContext::Role::Input) return;

  std::vector<std::uint64_t> none;
  std::uint64_t flat = flatIndex(info->shape, var->indices ? *var->indices : none);
  double value = theory.toDouble(info->elementType, theory.semElement(ElementLiteral{constant->text}, info->elementType));
  auto& bounds = table[{var->text, flat}];

  bool below = false, above = false;  // var <= c  /  var >= c
  switch (expr.op) {
    case CmpOp::Less:
    case CmpOp::LessEq: (varOnLeft ? below : above) = true; break;
    case CmpOp::Greater:
    case CmpOp::GreaterEq: (varOnLeft ? above : below) = true; break;
    case CmpOp::Equal: below = above = true; break;
    case CmpOp::NotEqual: break;
  }
  if (below) bounds.upper = bounds.upper ? std::min(*bounds.upper, value) : value;
  if (above) bounds.lower = bounds.lower ? std::max(*bounds.lower, value) : value;
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double unitInterval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace detail

/// Best-effort search for a satisfying assignment. Sample 0 puts every
/// bounded input element at its lower bound, sample 1 at its upper bound
/// (unbounded elements at 0); later samples draw uniformly inside the bounds.
/// Returning no witness is not a proof of unsatisfiability.
template <SamplableTheory T>
SearchResult<T> searchWitness(const Query& query, const ModelMap<T>& models, const T& theory, std::uint64_t budget,
                              std::uint64_t seed) {
  TypingContext ctx = typeQuery(query, theory);
  detail::BoundTable table;
  for (const auto& assertion : query.asserts) detail::harvestBounds(assertion.expr, ctx, theory, table);

  std::mt19937_64 rng(seed);
  SearchResult<T> result;
  for (std::uint64_t sample = 0; sample < budget; ++sample) {
    AssignmentMap<T> assignment;
    for (const auto& decl : query.networks) {
      for (const auto& input : decl.inputs) {
        std::vector<typename T::Scalar> values;
        for (std::uint64_t i = 0; i < elementCount(input.shape); ++i) {
          auto it = table.find({input.varName, i});
          detail::Bounds bounds = it == table.end() ? detail::Bounds{} : it->second;
          double x = 0.0;
          if (sample == 0) {
            x = bounds.lower.value_or(0.0);
          } else if (sample == 1) {
            x = bounds.upper.value_or(0.0);
          } else {
            double lo = bounds.lower.value_or(bounds.upper ? *bounds.upper - 1.0 : -1.0);
            double hi = bounds.upper.value_or(lo + (bounds.lower ? 1.0 : 2.0));
            if (hi < lo) hi = lo;
            x = lo + (hi - lo) * detail::unitInterval(rng);
          }
          values.push_back(theory.fromDouble(input.elementType, x));
        }
        assignment.emplace(input.varName, theory.makeTensor(TensorType{input.elementType, input.shape}, std::move(values)));
      }
    }
    ++result.samples;
    if (evalQuery(query, models, assignment, theory).satisfied) {
      result.witness = std::move(assignment);
      return result;
    }
  }
  return result;
}

}  // namespace vnnlib
