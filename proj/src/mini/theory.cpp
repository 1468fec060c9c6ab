/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include "vnnlib/mini/theory.hpp"

#include <stdexcept>

#include "vnnlib/mini/interpreter.hpp"

namespace vnnlib::mini {

namespace {

struct FloatArith {
  using Scalar = mini::Scalar;
  Scalar constant(const Initializer& init, std::size_t i) const { return init.values[i]; }
  Scalar zero(DType dtype) const { return mini::zero(dtype); }
  Scalar add(DType dtype, const Scalar& a, const Scalar& b) const { return mini::add(dtype, a, b); }
  Scalar subtract(DType dtype, const Scalar& a, const Scalar& b) const { return mini::subtract(dtype, a, b); }
  Scalar multiply(DType dtype, const Scalar& a, const Scalar& b) const { return mini::multiply(dtype, a, b); }
  Scalar relu(DType dtype, const Scalar& a) const { return mini::relu(dtype, a); }
};

// Weights read exactly from their decimal text; dtypes are ignored.
struct RationalArith {
  using Scalar = Rational;
  Scalar constant(const Initializer& init, std::size_t i) const { return *numeric::parseDecimal(init.data[i]); }
  Scalar zero(DType) const { return 0; }
  Scalar add(DType, const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar subtract(DType, const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar multiply(DType, const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar relu(DType, const Scalar& a) const { return a < 0 ? Scalar(0) : a; }
};

TensorType typeOf(const ValueType& type) { return {std::string(toString(type.dtype)), type.shape}; }

}  // namespace

DType MiniTheory::dtypeOf(std::string_view type) {
  auto dtype = parseDType(type);
  if (!dtype) throw std::invalid_argument("unknown element type '" + std::string(type) + "'");
  return *dtype;
}

bool MiniTheory::judgeElement(const ElementLiteral& literal, std::string_view type) const {
  auto dtype = parseDType(type);
  return dtype && mini::judgeElement(literal.text, *dtype);
}

bool MiniTheory::judgeTensor(const Tensor& tensor, const TensorType& type) const {
  auto dtype = parseDType(type.elementType);
  return dtype && *dtype == tensor.dtype && tensor.shape == type.shape &&
         tensor.data.size() == elementCount(tensor.shape);
}

ModelType MiniTheory::modelType(const Model& model) const {
  ModelType type;
  for (const auto& in : model->inputs()) type.inputs.push_back(typeOf(in.type));
  for (const auto& out : model->outputs()) type.outputs.push_back(typeOf(model->find(out)->type));
  return type;
}

std::optional<TensorType> MiniTheory::nodeOutputType(const Model& model, const NodeOutput& node) const {
  const auto* value = model->find(node);
  if (value == nullptr || value->source != MiniModel::Source::Node) return std::nullopt;
  return typeOf(value->type);
}

bool MiniTheory::judgeModel(const Model& model, const ModelType& type) const { return modelType(model) == type; }

bool MiniTheory::judgeNodeOutput(const Model& model, const NodeOutput& node, const TensorType& type) const {
  auto actual = nodeOutputType(model, node);
  return actual && *actual == type;
}

Scalar MiniTheory::semElement(const ElementLiteral& literal, std::string_view type) const {
  auto value = fromLiteral(literal.text, dtypeOf(type));
  if (!value) throw std::invalid_argument("'" + literal.text + "' is not a " + std::string(type));
  return *value;
}

MathTensor<Scalar> MiniTheory::semModel(const Model& model, std::span<const MathTensor<Scalar>> inputs,
                                        const NodeOutput& node) const {
  FloatArith arith;
  GraphInterpreter<FloatArith> interpreter(*model, arith, inputs);
  return interpreter.evaluate(node);
}

MathTensor<Rational> MiniTheory::realModel(const Model& model, std::span<const MathTensor<Rational>> inputs,
                                           const NodeOutput& node) const {
  RationalArith arith;
  GraphInterpreter<RationalArith> interpreter(*model, arith, inputs);
  return interpreter.evaluate(node);
}

MiniTensor MiniTheory::makeTensor(const TensorType& type, std::vector<Scalar> values) const {
  if (values.size() != elementCount(type.shape)) {
    throw std::invalid_argument("tensor of shape " + toString(type.shape) + " needs " +
                                std::to_string(elementCount(type.shape)) + " values");
  }
  return {dtypeOf(type.elementType), type.shape, std::move(values)};
}

}  // namespace vnnlib::mini
