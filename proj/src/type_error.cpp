/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include "vnnlib/type_error.hpp"

namespace vnnlib {

std::string_view codeName(TypeErrorCode code) {
  switch (code) {
    case TypeErrorCode::DuplicateName: return "DuplicateName";
    case TypeErrorCode::UnknownNetwork: return "UnknownNetwork";
    case TypeErrorCode::EquivChain: return "EquivChain";
    case TypeErrorCode::ShapeMismatch: return "ShapeMismatch";
    case TypeErrorCode::ElementTypeMismatch: return "ElementTypeMismatch";
    case TypeErrorCode::UntypableComparison: return "UntypableComparison";
    case TypeErrorCode::MixedTypes: return "MixedTypes";
    case TypeErrorCode::BadConstant: return "BadConstant";
    case TypeErrorCode::UnknownVariable: return "UnknownVariable";
    case TypeErrorCode::RankMismatch: return "RankMismatch";
    case TypeErrorCode::IndexOutOfBounds: return "IndexOutOfBounds";
    case TypeErrorCode::ModelTypeMismatch: return "ModelTypeMismatch";
    case TypeErrorCode::ModelNotEqual: return "ModelNotEqual";
    case TypeErrorCode::ModelNotIsomorphic: return "ModelNotIsomorphic";
    case TypeErrorCode::HiddenNodeMissing: return "HiddenNodeMissing";
    case TypeErrorCode::AssignmentMissing: return "AssignmentMissing";
    case TypeErrorCode::AssignmentTypeMismatch: return "AssignmentTypeMismatch";
    case TypeErrorCode::UnknownElementType: return "UnknownElementType";
  }
  return "?";
}

}  // namespace vnnlib
