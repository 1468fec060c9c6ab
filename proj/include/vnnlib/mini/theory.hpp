/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vnnlib/mini/model.hpp"
#include "vnnlib/mini/scalar.hpp"
#include "vnnlib/numeric.hpp"
#include "vnnlib/theory.hpp"

namespace vnnlib::mini {

struct MiniTensor {
  DType dtype = DType::Float32;
  Shape shape;
  std::vector<Scalar> data;
};

/// Floating-point / integer tensor-graph theory over "mini-nn-v1" models.
class MiniTheory {
 public:
  using Scalar = mini::Scalar;
  using Tensor = MiniTensor;
  using Model = std::shared_ptr<const MiniModel>;
  using NodeOutput = std::string;

  std::string_view name() const { return "mini"; }
  std::span<const std::string_view> elementTypes() const { return kDTypeNames; }
  bool hasElementType(std::string_view token) const { return parseDType(token).has_value(); }

  std::vector<NodeOutput> networkOutputs(const Model& model) const { return model->outputs(); }

  bool judgeElement(const ElementLiteral& literal, std::string_view type) const;
  bool judgeTensor(const Tensor& tensor, const TensorType& type) const;
  bool judgeModel(const Model& model, const ModelType& type) const;
  bool judgeNodeOutput(const Model& model, const NodeOutput& node, const TensorType& type) const;
  bool judgeIsomorphic(const Model& a, const Model& b) const { return isomorphic(*a, *b); }
  bool sameArtifact(const Model& a, const Model& b) const { return a->rawBytes() == b->rawBytes(); }

  MathTensor<Scalar> semTensor(const Tensor& tensor) const { return {tensor.shape, tensor.data}; }
  Scalar semElement(const ElementLiteral& literal, std::string_view type) const;
  MathTensor<Scalar> semModel(const Model& model, std::span<const MathTensor<Scalar>> inputs,
                              const NodeOutput& node) const;

  Scalar negate(std::string_view type, const Scalar& x) const { return mini::negate(dtypeOf(type), x); }
  Scalar add(std::string_view type, const Scalar& x, const Scalar& y) const { return mini::add(dtypeOf(type), x, y); }
  Scalar multiply(std::string_view type, const Scalar& x, const Scalar& y) const {
    return mini::multiply(dtypeOf(type), x, y);
  }
  bool compare(CmpOp op, std::string_view type, const Scalar& x, const Scalar& y) const {
    return mini::compare(op, dtypeOf(type), x, y);
  }

  Tensor makeTensor(const TensorType& type, std::vector<Scalar> values) const;
  Scalar fromDouble(std::string_view type, double value) const { return mini::fromDouble(dtypeOf(type), value); }
  double toDouble(std::string_view, const Scalar& x) const { return mini::toDouble(x); }
  TensorType tensorType(const Tensor& tensor) const { return {std::string(toString(tensor.dtype)), tensor.shape}; }
  std::string toLiteral(std::string_view type, const Scalar& x) const { return mini::toLiteral(dtypeOf(type), x); }

  // Hooks used by the real-valued wrapper.
  ModelType modelType(const Model& model) const;
  std::optional<TensorType> nodeOutputType(const Model& model, const NodeOutput& node) const;
  MathTensor<Rational> realModel(const Model& model, std::span<const MathTensor<Rational>> inputs,
                                 const NodeOutput& node) const;

 private:
  static DType dtypeOf(std::string_view type);
};

static_assert(SamplableTheory<MiniTheory>);

}  // namespace vnnlib::mini
