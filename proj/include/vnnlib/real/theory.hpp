/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

// Real-valued theory built on top of another theory's models: one element
// type `real`, exact rational tensors, shape-only model typing, and models
// interpreted as functions over the rationals.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vnnlib/numeric.hpp"
#include "vnnlib/theory.hpp"

namespace vnnlib::real {

inline constexpr std::string_view kReal = "real";

/// A theory whose models can be read as real-valued functions.
template <class B>
concept RealInterpretable =
    NetworkTheory<B> && requires(const B& base, const typename B::Model& model, const typename B::NodeOutput& node,
                                 std::span<const MathTensor<Rational>> inputs) {
      { base.modelType(model) } -> std::same_as<ModelType>;
      { base.nodeOutputType(model, node) } -> std::same_as<std::optional<TensorType>>;
      { base.realModel(model, inputs, node) } -> std::same_as<MathTensor<Rational>>;
    };

template <RealInterpretable Base>
class RealTheory {
 public:
  using Scalar = Rational;
  using Tensor = MathTensor<Rational>;
  using Model = typename Base::Model;
  using NodeOutput = typename Base::NodeOutput;

  explicit RealTheory(Base base) : base_(std::move(base)) {}

  const Base& base() const { return base_; }

  std::string_view name() const { return "real"; }
  std::span<const std::string_view> elementTypes() const { return kTypes; }
  bool hasElementType(std::string_view token) const { return token == kReal; }

  std::vector<NodeOutput> networkOutputs(const Model& model) const { return base_.networkOutputs(model); }

  bool judgeElement(const ElementLiteral& literal, std::string_view type) const {
    return type == kReal && isElementLiteral(literal.text);
  }

  bool judgeTensor(const Tensor& tensor, const TensorType& type) const {
    return type.elementType == kReal && tensor.shape == type.shape && tensor.values.size() == elementCount(type.shape);
  }

  bool judgeModel(const Model& model, const ModelType& type) const {
    ModelType actual = base_.modelType(model);
    return sameShapes(actual.inputs, type.inputs) && sameShapes(actual.outputs, type.outputs);
  }

  bool judgeNodeOutput(const Model& model, const NodeOutput& node, const TensorType& type) const {
    auto actual = base_.nodeOutputType(model, node);
    return actual && actual->shape == type.shape;
  }

  bool judgeIsomorphic(const Model& a, const Model& b) const { return base_.judgeIsomorphic(a, b); }
  bool sameArtifact(const Model& a, const Model& b) const { return base_.sameArtifact(a, b); }

  MathTensor<Rational> semTensor(const Tensor& tensor) const { return tensor; }

  Scalar semElement(const ElementLiteral& literal, std::string_view) const {
    auto value = numeric::parseDecimal(literal.text);
    if (!value) throw std::invalid_argument("'" + literal.text + "' is not a decimal literal");
    return *value;
  }

  MathTensor<Rational> semModel(const Model& model, std::span<const MathTensor<Rational>> inputs,
                                const NodeOutput& node) const {
    return base_.realModel(model, inputs, node);
  }

  Scalar negate(std::string_view, const Scalar& x) const { return -x; }
  Scalar add(std::string_view, const Scalar& x, const Scalar& y) const { return x + y; }
  Scalar multiply(std::string_view, const Scalar& x, const Scalar& y) const { return x * y; }

  bool compare(CmpOp op, std::string_view, const Scalar& x, const Scalar& y) const {
    switch (op) {
      case CmpOp::Less: return x < y;
      case CmpOp::LessEq: return x <= y;
      case CmpOp::Greater: return x > y;
      case CmpOp::GreaterEq: return x >= y;
      case CmpOp::Equal: return x == y;
      case CmpOp::NotEqual: return x != y;
    }
    return false;
  }

  Tensor makeTensor(const TensorType& type, std::vector<Scalar> values) const {
    if (values.size() != elementCount(type.shape)) {
      throw std::invalid_argument("tensor of shape " + toString(type.shape) + " needs " +
                                  std::to_string(elementCount(type.shape)) + " values");
    }
    return {type.shape, std::move(values)};
  }
  Scalar fromDouble(std::string_view, double value) const { return numeric::exactRational(value); }
  double toDouble(std::string_view, const Scalar& x) const { return x.get_d(); }
  TensorType tensorType(const Tensor& tensor) const { return {std::string(kReal), tensor.shape}; }
  std::string toLiteral(std::string_view, const Scalar& x) const { return numeric::toDecimalString(x); }

 private:
  static constexpr std::array<std::string_view, 1> kTypes = {kReal};

  static bool sameShapes(const std::vector<TensorType>& a, const std::vector<TensorType>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].shape != b[i].shape) return false;
    }
    return true;
  }

  Base base_;
};

template <RealInterpretable Base>
RealTheory<Base> wrapTheory(Base base) {
  return RealTheory<Base>(std::move(base));
}

}  // namespace vnnlib::real
