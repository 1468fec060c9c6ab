/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

// Demand-driven graph interpreter, generic over the scalar arithmetic so
// that the float theory and the real theory share one traversal.

#pragma once

#include <concepts>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vnnlib/mini/model.hpp"
#include "vnnlib/theory.hpp"

namespace vnnlib::mini {

class UnreachableNode : public std::runtime_error {
 public:
  explicit UnreachableNode(const std::string& name) : std::runtime_error("no value named \"" + name + "\" in model") {}
};

template <class A>
concept GraphArithmetic = requires(const A& arith, const Initializer& init, std::size_t i, DType dtype,
                                   const typename A::Scalar& x) {
  { arith.constant(init, i) } -> std::same_as<typename A::Scalar>;
  { arith.zero(dtype) } -> std::same_as<typename A::Scalar>;
  { arith.add(dtype, x, x) } -> std::same_as<typename A::Scalar>;
  { arith.subtract(dtype, x, x) } -> std::same_as<typename A::Scalar>;
  { arith.multiply(dtype, x, x) } -> std::same_as<typename A::Scalar>;
  { arith.relu(dtype, x) } -> std::same_as<typename A::Scalar>;
};

template <GraphArithmetic A>
class GraphInterpreter {
 public:
  using Scalar = typename A::Scalar;
  using Tensor = MathTensor<Scalar>;

  GraphInterpreter(const MiniModel& model, const A& arith, std::span<const Tensor> inputs)
      : model_(model), arith_(arith), inputs_(inputs) {
    if (inputs.size() != model.inputs().size()) {
      throw std::invalid_argument("model takes " + std::to_string(model.inputs().size()) + " inputs, got " +
                                  std::to_string(inputs.size()));
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const Shape& expected = model.inputs()[i].type.shape;
      if (inputs[i].shape != expected || inputs[i].values.size() != elementCount(expected)) {
        throw std::invalid_argument("input " + std::to_string(i) + " has shape " + toString(inputs[i].shape) +
                                    ", model expects " + toString(expected));
      }
    }
  }

  /// Value named `name`; node outputs are computed once and memoized.
  const Tensor& evaluate(std::string_view name) {
    if (auto it = memo_.find(name); it != memo_.end()) return it->second;
    const auto* value = model_.find(name);
    if (value == nullptr) throw UnreachableNode(std::string(name));

    Tensor result;
    switch (value->source) {
      case MiniModel::Source::Input:
        result = inputs_[value->index];
        break;
      case MiniModel::Source::Initializer: {
        const Initializer& init = model_.initializers()[value->index];
        result.shape = init.type.shape;
        for (std::size_t i = 0; i < init.values.size(); ++i) result.values.push_back(arith_.constant(init, i));
        break;
      }
      case MiniModel::Source::Node:
        result = compute(model_.nodes()[value->index]);
        break;
    }
    return memo_.emplace(std::string(name), std::move(result)).first->second;
  }

 private:
  Tensor compute(const Node& node) {
    DType dtype = node.type.dtype;
    if (node.op == OpKind::Relu) {
      Tensor x = evaluate(node.inputs[0]);
      for (auto& v : x.values) v = arith_.relu(dtype, v);
      return x;
    }
    const Tensor& a = evaluate(node.inputs[0]);
    const Tensor& b = evaluate(node.inputs[1]);
    Tensor out{node.type.shape, {}};
    if (node.op == OpKind::MatMul) {
      std::uint64_t rows = a.shape.dims[0], inner = a.shape.dims[1], cols = b.shape.dims[1];
      out.values.reserve(rows * cols);
      for (std::uint64_t i = 0; i < rows; ++i) {
        for (std::uint64_t j = 0; j < cols; ++j) {
          if (inner == 0) {
            out.values.push_back(arith_.zero(dtype));
            continue;
          }
          Scalar acc = arith_.multiply(dtype, a.values[i * inner], b.values[j]);
          for (std::uint64_t k = 1; k < inner; ++k) {
            acc = arith_.add(dtype, acc, arith_.multiply(dtype, a.values[i * inner + k], b.values[k * cols + j]));
          }
          out.values.push_back(std::move(acc));
        }
      }
      return out;
    }
    out.values.reserve(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      switch (node.op) {
        case OpKind::Add: out.values.push_back(arith_.add(dtype, a.values[i], b.values[i])); break;
        case OpKind::Sub: out.values.push_back(arith_.subtract(dtype, a.values[i], b.values[i])); break;
        default: out.values.push_back(arith_.multiply(dtype, a.values[i], b.values[i])); break;
      }
    }
    return out;
  }

  const MiniModel& model_;
  const A& arith_;
  std::span<const Tensor> inputs_;
  std::map<std::string, Tensor, std::less<>> memo_;
};

}  // namespace vnnlib::mini
