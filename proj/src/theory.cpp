/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include "vnnlib/theory.hpp"

#include <cctype>

namespace vnnlib {

std::string toString(const Shape& shape) {
  std::string out = "[";
  for (std::size_t i = 0; i < shape.dims.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(shape.dims[i]);
  }
  out += ']';
  return out;
}

std::string toString(const TensorType& type) { return type.elementType + " " + toString(type.shape); }

std::uint64_t elementCount(const Shape& shape) {
  std::uint64_t n = 1;
  for (auto d : shape.dims) n *= d;
  return n;
}

std::uint64_t flatIndex(const Shape& shape, std::span<const std::uint64_t> indices) {
  if (indices.size() != shape.rank()) {
    throw IndexError(IndexError::Kind::RankMismatch, 0,
                     "expected " + std::to_string(shape.rank()) + " indices, got " + std::to_string(indices.size()));
  }
  std::uint64_t offset = 0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= shape.dims[i]) {
      throw IndexError(IndexError::Kind::IndexOutOfBounds, i,
                       "index " + std::to_string(indices[i]) + " at position " + std::to_string(i) +
                           " is out of bounds for extent " + std::to_string(shape.dims[i]));
    }
    offset = offset * shape.dims[i] + indices[i];
  }
  return offset;
}

bool isElementLiteral(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  auto digits = [&] {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return i > start;
  };
  if (!digits()) return false;
  if (i == text.size()) return true;
  if (text[i] != '.') return false;
  ++i;
  return digits() && i == text.size();
}

std::string_view toString(CmpOp op) {
  switch (op) {
    case CmpOp::Less: return "<";
    case CmpOp::LessEq: return "<=";
    case CmpOp::Greater: return ">";
    case CmpOp::GreaterEq: return ">=";
    case CmpOp::Equal: return "==";
    case CmpOp::NotEqual: return "!=";
  }
  return "?";
}

}  // namespace vnnlib
