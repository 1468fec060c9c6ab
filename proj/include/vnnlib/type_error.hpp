/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "vnnlib/ast.hpp"

namespace vnnlib {

enum class TypeErrorCode {
  DuplicateName,
  UnknownNetwork,
  EquivChain,
  ShapeMismatch,
  ElementTypeMismatch,
  UntypableComparison,
  MixedTypes,
  BadConstant,
  UnknownVariable,
  RankMismatch,
  IndexOutOfBounds,
  ModelTypeMismatch,
  ModelNotEqual,
  ModelNotIsomorphic,
  HiddenNodeMissing,
  AssignmentMissing,
  AssignmentTypeMismatch,
  UnknownElementType,
};

inline constexpr std::size_t kTypeErrorCodeCount = 18;

std::string_view codeName(TypeErrorCode code);

class TypeError : public std::runtime_error {
 public:
  TypeError(TypeErrorCode code, Span span, const std::string& message)
      : std::runtime_error(message), code_(code), span_(span) {}

  TypeErrorCode code() const { return code_; }
  const Span& span() const { return span_; }

 private:
  TypeErrorCode code_;
  Span span_;
};

}  // namespace vnnlib
