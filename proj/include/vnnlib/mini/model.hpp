/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

// The "mini-nn-v1" tensor-graph format.
//
//   {"format": "mini-nn-v1", "opset": 1,
//    "inputs": [{"name": s, "dtype": s, "shape": [n...]}...],
//    "outputs": [s...],
//    "initializers": [{"name": s, "dtype": s, "shape": [n...], "data": ["1.5"...]}...],
//    "nodes": [{"op": s, "inputs": [s...], "outputs": [s]}...]}
//
// Nodes are listed in topological order and each produces one value. Ops:
// MatMul (rank 2 x rank 2), Add, Sub, Mul (same shape), Relu (floats).

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vnnlib/mini/scalar.hpp"
#include "vnnlib/theory.hpp"

namespace vnnlib::mini {

class ModelFormatError : public std::runtime_error {
 public:
  ModelFormatError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

  /// JSON pointer to the offending element ("" for the document).
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

enum class OpKind { MatMul, Add, Sub, Mul, Relu };

std::optional<OpKind> parseOpKind(std::string_view name);
std::string_view toString(OpKind op);

struct ValueType {
  DType dtype;
  Shape shape;

  friend bool operator==(const ValueType&, const ValueType&) = default;
};

struct GraphInput {
  std::string name;
  ValueType type;
};

struct Initializer {
  std::string name;
  ValueType type;
  std::vector<std::string> data;  // decimal literals as written
  std::vector<Scalar> values;     // data rounded to type.dtype
};

struct Node {
  OpKind op;
  std::vector<std::string> inputs;
  std::string output;
  ValueType type;  // inferred
};

class MiniModel {
 public:
  enum class Source { Input, Initializer, Node };

  struct Value {
    Source source;
    std::size_t index;
    ValueType type;
  };

  /// Parses and validates; `bytes` is retained verbatim.
  static MiniModel parse(std::string bytes);
  static std::shared_ptr<const MiniModel> load(const std::filesystem::path& path);

  const std::string& rawBytes() const { return rawBytes_; }
  int opset() const { return opset_; }
  const std::vector<GraphInput>& inputs() const { return inputs_; }
  const std::vector<std::string>& outputs() const { return outputs_; }
  const std::vector<Initializer>& initializers() const { return initializers_; }
  const std::vector<Node>& nodes() const { return nodes_; }

  const Value* find(std::string_view name) const;

 private:
  std::string rawBytes_;
  int opset_ = 1;
  std::vector<GraphInput> inputs_;
  std::vector<std::string> outputs_;
  std::vector<Initializer> initializers_;
  std::vector<Node> nodes_;
  std::map<std::string, Value, std::less<>> values_;
};

/// Same graph up to value renaming, initializer values and a uniform
/// relabelling of dtypes.
bool isomorphic(const MiniModel& a, const MiniModel& b);

}  // namespace vnnlib::mini
