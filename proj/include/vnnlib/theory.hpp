/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

// Shape/type vocabulary shared by every network theory, and the NetworkTheory
// concept that the parser, typer and evaluator are written against.
//
// A network theory supplies element types, tensors, models, node-output
// references, five typing judgements and the semantics of models and of the
// scalar operations. Element types are carried as plain tokens (the text that
// appears in a query); each theory decides which tokens it accepts.

#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vnnlib {

/// Tensor extents. The empty list is a valid rank-0 shape.
struct Shape {
  std::vector<std::uint64_t> dims;

  Shape() = default;
  Shape(std::initializer_list<std::uint64_t> d) : dims(d) {}
  explicit Shape(std::vector<std::uint64_t> d) : dims(std::move(d)) {}

  std::size_t rank() const { return dims.size(); }
  friend bool operator==(const Shape&, const Shape&) = default;
};

std::string toString(const Shape& shape);

/// Product of the dims; 1 for rank-0.
std::uint64_t elementCount(const Shape& shape);

class IndexError : public std::out_of_range {
 public:
  enum class Kind { RankMismatch, IndexOutOfBounds };

  IndexError(Kind kind, std::size_t position, std::string what)
      : std::out_of_range(std::move(what)), kind_(kind), position_(position) {}

  Kind kind() const { return kind_; }
  /// Offending index position (for IndexOutOfBounds).
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Row-major linear offset of `indices` within `shape`.
std::uint64_t flatIndex(const Shape& shape, std::span<const std::uint64_t> indices);

struct TensorType {
  std::string elementType;
  Shape shape;

  friend bool operator==(const TensorType&, const TensorType&) = default;
};

std::string toString(const TensorType& type);

struct ModelType {
  std::vector<TensorType> inputs;
  std::vector<TensorType> outputs;

  friend bool operator==(const ModelType&, const ModelType&) = default;
};

/// Source text of a numeric literal: `-?[0-9]+(\.[0-9]+)?`.
struct ElementLiteral {
  std::string text;

  friend bool operator==(const ElementLiteral&, const ElementLiteral&) = default;
};

bool isElementLiteral(std::string_view text);

/// A mathematical tensor in some theory's value domain, row-major.
template <class Scalar>
struct MathTensor {
  Shape shape;
  std::vector<Scalar> values;
};

enum class CmpOp { Less, LessEq, Greater, GreaterEq, Equal, NotEqual };

std::string_view toString(CmpOp op);

template <class T>
concept NetworkTheory = requires(const T& theory, std::string_view token, const ElementLiteral& literal,
                                 const typename T::Tensor& tensor, const typename T::Model& model,
                                 const typename T::NodeOutput& node, const TensorType& tensorType,
                                 const ModelType& modelType, const typename T::Scalar& x,
                                 std::span<const MathTensor<typename T::Scalar>> inputs, CmpOp op) {
  typename T::Scalar;
  typename T::Tensor;
  typename T::Model;
  typename T::NodeOutput;
  requires std::constructible_from<typename T::NodeOutput, std::string>;

  { theory.name() } -> std::convertible_to<std::string_view>;
  { theory.elementTypes() } -> std::convertible_to<std::span<const std::string_view>>;
  { theory.hasElementType(token) } -> std::same_as<bool>;

  { theory.networkOutputs(model) } -> std::same_as<std::vector<typename T::NodeOutput>>;

  { theory.judgeElement(literal, token) } -> std::same_as<bool>;
  { theory.judgeTensor(tensor, tensorType) } -> std::same_as<bool>;
  { theory.judgeModel(model, modelType) } -> std::same_as<bool>;
  { theory.judgeNodeOutput(model, node, tensorType) } -> std::same_as<bool>;
  { theory.judgeIsomorphic(model, model) } -> std::same_as<bool>;
  // Absolute identity of model artifacts, used by `equal-to`.
  { theory.sameArtifact(model, model) } -> std::same_as<bool>;

  { theory.semTensor(tensor) } -> std::same_as<MathTensor<typename T::Scalar>>;
  { theory.semElement(literal, token) } -> std::same_as<typename T::Scalar>;
  { theory.semModel(model, inputs, node) } -> std::same_as<MathTensor<typename T::Scalar>>;

  { theory.negate(token, x) } -> std::same_as<typename T::Scalar>;
  { theory.add(token, x, x) } -> std::same_as<typename T::Scalar>;
  { theory.multiply(token, x, x) } -> std::same_as<typename T::Scalar>;
  { theory.compare(op, token, x, x) } -> std::same_as<bool>;
};

/// Extra capabilities used by the witness search and by assignment files:
/// building tensors from scalars and moving between scalars and text/doubles.
/// `toLiteral` must read back through semElement to the same scalar.
template <class T>
concept SamplableTheory =
    NetworkTheory<T> && requires(const T& theory, std::string_view token, const TensorType& tensorType,
                                 std::vector<typename T::Scalar> values, const typename T::Scalar& x,
                                 double d, const typename T::Tensor& tensor) {
      { theory.makeTensor(tensorType, std::move(values)) } -> std::same_as<typename T::Tensor>;
      { theory.fromDouble(token, d) } -> std::same_as<typename T::Scalar>;
      { theory.toDouble(token, x) } -> std::same_as<double>;
      { theory.tensorType(tensor) } -> std::same_as<TensorType>;
      { theory.toLiteral(token, x) } -> std::same_as<std::string>;
    };

}  // namespace vnnlib
