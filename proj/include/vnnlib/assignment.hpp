/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

// Assignment files: a JSON object mapping each input variable to
// {"dtype": s, "shape": [n...], "data": ["decimal"...]}, row-major.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "vnnlib/theory.hpp"
#include "vnnlib/typer.hpp"

namespace vnnlib {

class AssignmentFormatError : public std::runtime_error {
 public:
  AssignmentFormatError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

template <SamplableTheory T>
AssignmentMap<T> parseAssignment(std::string_view text, const T& theory) {
  using nlohmann::json;
  auto bad = [](const std::string& path, const std::string& message) { throw AssignmentFormatError(path, message); };

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("", "expected an object");

  AssignmentMap<T> result;
  for (const auto& [name, entry] : doc.items()) {
    std::string path = "/" + name;
    if (!entry.is_object()) bad(path, "expected an object");
    for (const auto& [key, value] : entry.items()) {
      if (key != "dtype" && key != "shape" && key != "data") bad(path + "/" + key, "unknown key");
    }
    for (auto key : {"dtype", "shape", "data"}) {
      if (!entry.contains(key)) bad(path, std::string("missing key \"") + key + "\"");
    }
    if (!entry["dtype"].is_string()) bad(path + "/dtype", "expected a string");
    std::string dtype = entry["dtype"].template get<std::string>();
    if (!theory.hasElementType(dtype)) {
      bad(path + "/dtype", "element type \"" + dtype + "\" is not provided by the " + std::string(theory.name()) +
                               " theory");
    }
    if (!entry["shape"].is_array()) bad(path + "/shape", "expected an array");
    Shape shape;
    for (const auto& dim : entry["shape"]) {
      if (!dim.is_number_unsigned()) bad(path + "/shape", "expected non-negative integers");
      shape.dims.push_back(dim.template get<std::uint64_t>());
    }
    if (!entry["data"].is_array()) bad(path + "/data", "expected an array");
    const auto& data = entry["data"];
    if (data.size() != elementCount(shape)) {
      bad(path + "/data", "expected " + std::to_string(elementCount(shape)) + " elements, got " +
                              std::to_string(data.size()));
    }
    std::vector<typename T::Scalar> values;
    for (std::size_t i = 0; i < data.size(); ++i) {
      std::string itemPath = path + "/data/" + std::to_string(i);
      if (!data[i].is_string()) bad(itemPath, "expected a decimal string");
      ElementLiteral literal{data[i].template get<std::string>()};
      if (!theory.judgeElement(literal, dtype)) bad(itemPath, "\"" + literal.text + "\" is not a valid " + dtype);
      values.push_back(theory.semElement(literal, dtype));
    }
    result.emplace(name, theory.makeTensor(TensorType{dtype, std::move(shape)}, std::move(values)));
  }
  return result;
}

template <SamplableTheory T>
nlohmann::json assignmentToJson(const AssignmentMap<T>& assignment, const T& theory) {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [name, tensor] : assignment) {
    TensorType type = theory.tensorType(tensor);
    auto values = theory.semTensor(tensor).values;
    nlohmann::json data = nlohmann::json::array();
    for (const auto& v : values) data.push_back(theory.toLiteral(type.elementType, v));
    doc[name] = {{"dtype", type.elementType}, {"shape", type.shape.dims}, {"data", std::move(data)}};
  }
  return doc;
}

}  // namespace vnnlib
