/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include "vnnlib/mini/model.hpp"

#include <array>
#include <set>

#include "json.hpp"
#include "vnnlib/io.hpp"

namespace vnnlib::mini {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 5> kOpNames = {"MatMul", "Add", "Sub", "Mul", "Relu"};

[[noreturn]] void bad(const std::string& path, const std::string& message) { throw ModelFormatError(path, message); }

std::string at(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string at(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

void requireKeys(const json& object, const std::string& path, std::initializer_list<std::string_view> keys) {
  if (!object.is_object()) bad(path, "expected an object");
  for (auto key : keys) {
    if (!object.contains(key)) bad(path, "missing key \"" + std::string(key) + "\"");
  }
  for (const auto& item : object.items()) {
    bool known = false;
    for (auto key : keys) known = known || item.key() == key;
    if (!known) bad(at(path, item.key()), "unknown key");
  }
}

const json::array_t& array(const json& value, const std::string& path) {
  if (!value.is_array()) bad(path, "expected an array");
  return value.get_ref<const json::array_t&>();
}

std::string name(const json& value, const std::string& path) {
  if (!value.is_string()) bad(path, "expected a string");
  auto text = value.get<std::string>();
  if (text.empty()) bad(path, "empty name");
  return text;
}

DType dtype(const json& value, const std::string& path) {
  if (!value.is_string()) bad(path, "expected a string");
  auto parsed = parseDType(value.get_ref<const std::string&>());
  if (!parsed) bad(path, "unknown dtype \"" + value.get<std::string>() + "\"");
  return *parsed;
}

Shape shape(const json& value, const std::string& path) {
  Shape result;
  const auto& dims = array(value, path);
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (!dims[i].is_number_unsigned()) bad(at(path, i), "expected a non-negative integer");
    result.dims.push_back(dims[i].get<std::uint64_t>());
  }
  return result;
}

std::string typeText(const ValueType& type) {
  return std::string(toString(type.dtype)) + toString(type.shape);
}

}  // namespace

std::optional<OpKind> parseOpKind(std::string_view name) {
  for (std::size_t i = 0; i < kOpNames.size(); ++i) {
    if (kOpNames[i] == name) return static_cast<OpKind>(i);
  }
  return std::nullopt;
}

std::string_view toString(OpKind op) { return kOpNames[static_cast<std::size_t>(op)]; }

const MiniModel::Value* MiniModel::find(std::string_view name) const {
  auto it = values_.find(name);
  return it == values_.end() ? nullptr : &it->second;
}

MiniModel MiniModel::parse(std::string bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    bad("", std::string("invalid JSON: ") + e.what());
  }

  MiniModel m;
  m.rawBytes_ = std::move(bytes);
  requireKeys(doc, "", {"format", "opset", "inputs", "outputs", "initializers", "nodes"});
  if (doc["format"] != "mini-nn-v1") bad("/format", "expected \"mini-nn-v1\"");
  if (!doc["opset"].is_number_integer() || doc["opset"] != 1) bad("/opset", "only opset 1 is supported");

  auto define = [&m](const std::string& name, Value value, const std::string& path) {
    if (!m.values_.emplace(name, std::move(value)).second) bad(path, "duplicate value name \"" + name + "\"");
  };

  const auto& inputs = array(doc["inputs"], "/inputs");
  if (inputs.empty()) bad("/inputs", "a model needs at least one input");
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    std::string path = at("/inputs", i);
    requireKeys(inputs[i], path, {"name", "dtype", "shape"});
    GraphInput in{name(inputs[i]["name"], at(path, "name")),
                  {dtype(inputs[i]["dtype"], at(path, "dtype")), shape(inputs[i]["shape"], at(path, "shape"))}};
    define(in.name, {Source::Input, i, in.type}, at(path, "name"));
    m.inputs_.push_back(std::move(in));
  }

  const auto& inits = array(doc["initializers"], "/initializers");
  for (std::size_t i = 0; i < inits.size(); ++i) {
    std::string path = at("/initializers", i);
    requireKeys(inits[i], path, {"name", "dtype", "shape", "data"});
    Initializer init{name(inits[i]["name"], at(path, "name")),
                     {dtype(inits[i]["dtype"], at(path, "dtype")), shape(inits[i]["shape"], at(path, "shape"))},
                     {},
                     {}};
    const auto& data = array(inits[i]["data"], at(path, "data"));
    if (data.size() != elementCount(init.type.shape)) {
      bad(at(path, "data"), "expected " + std::to_string(elementCount(init.type.shape)) + " elements, got " +
                                std::to_string(data.size()));
    }
    for (std::size_t j = 0; j < data.size(); ++j) {
      std::string itemPath = at(at(path, "data"), j);
      if (!data[j].is_string()) bad(itemPath, "expected a decimal string");
      const auto& text = data[j].get_ref<const std::string&>();
      auto value = fromLiteral(text, init.type.dtype);
      if (!value) bad(itemPath, "\"" + text + "\" is not a valid " + std::string(toString(init.type.dtype)));
      init.data.push_back(text);
      init.values.push_back(*value);
    }
    define(init.name, {Source::Initializer, i, init.type}, at(path, "name"));
    m.initializers_.push_back(std::move(init));
  }

  const auto& nodes = array(doc["nodes"], "/nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::string path = at("/nodes", i);
    requireKeys(nodes[i], path, {"op", "inputs", "outputs"});
    if (!nodes[i]["op"].is_string()) bad(at(path, "op"), "expected a string");
    auto op = parseOpKind(nodes[i]["op"].get_ref<const std::string&>());
    if (!op) bad(at(path, "op"), "unknown op \"" + nodes[i]["op"].get<std::string>() + "\"");

    Node node{*op, {}, {}, {}};
    std::vector<ValueType> operandTypes;
    const auto& operands = array(nodes[i]["inputs"], at(path, "inputs"));
    std::size_t arity = *op == OpKind::Relu ? 1 : 2;
    if (operands.size() != arity) {
      bad(at(path, "inputs"), std::string(toString(*op)) + " takes " + std::to_string(arity) + " inputs, got " +
                                  std::to_string(operands.size()));
    }
    for (std::size_t j = 0; j < operands.size(); ++j) {
      std::string operandPath = at(at(path, "inputs"), j);
      node.inputs.push_back(name(operands[j], operandPath));
      const Value* v = m.find(node.inputs.back());
      if (v == nullptr) bad(operandPath, "undefined value \"" + node.inputs.back() + "\"");
      operandTypes.push_back(v->type);
    }
    const auto& results = array(nodes[i]["outputs"], at(path, "outputs"));
    if (results.size() != 1) bad(at(path, "outputs"), "a node produces exactly one output");
    node.output = name(results[0], at(at(path, "outputs"), 0));

    const ValueType& a = operandTypes[0];
    if (*op == OpKind::Relu) {
      if (!isFloat(a.dtype)) bad(path, "Relu is defined on float types only, got " + typeText(a));
      node.type = a;
    } else {
      const ValueType& b = operandTypes[1];
      if (a.dtype != b.dtype) bad(path, "operand dtypes differ: " + typeText(a) + " vs " + typeText(b));
      if (*op == OpKind::MatMul) {
        if (a.shape.rank() != 2 || b.shape.rank() != 2) {
          bad(path, "MatMul needs rank-2 operands, got " + typeText(a) + " and " + typeText(b));
        }
        if (a.shape.dims[1] != b.shape.dims[0]) {
          bad(path, "MatMul inner dimensions differ: " + typeText(a) + " x " + typeText(b));
        }
        node.type = {a.dtype, Shape{a.shape.dims[0], b.shape.dims[1]}};
      } else {
        if (a.shape != b.shape) bad(path, "operand shapes differ: " + typeText(a) + " vs " + typeText(b));
        node.type = a;
      }
    }
    define(node.output, {Source::Node, i, node.type}, at(at(path, "outputs"), 0));
    m.nodes_.push_back(std::move(node));
  }

  const auto& outputs = array(doc["outputs"], "/outputs");
  if (outputs.empty()) bad("/outputs", "a model needs at least one output");
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    std::string path = at("/outputs", i);
    std::string out = name(outputs[i], path);
    const Value* v = m.find(out);
    if (v == nullptr) bad(path, "undefined value \"" + out + "\"");
    if (v->source != Source::Node) bad(path, "\"" + out + "\" is not a node output");
    m.outputs_.push_back(std::move(out));
  }
  return m;
}

std::shared_ptr<const MiniModel> MiniModel::load(const std::filesystem::path& path) {
  return std::make_shared<const MiniModel>(parse(readFile(path)));
}

bool isomorphic(const MiniModel& a, const MiniModel& b) {
  if (a.nodes().size() != b.nodes().size() || a.inputs().size() != b.inputs().size() ||
      a.outputs().size() != b.outputs().size()) {
    return false;
  }

  std::map<DType, DType> forward, backward;
  auto relabel = [&](DType x, DType y) {
    auto [f, fresh1] = forward.emplace(x, y);
    auto [g, fresh2] = backward.emplace(y, x);
    return f->second == y && g->second == x;
  };

  for (std::size_t i = 0; i < a.inputs().size(); ++i) {
    const auto& x = a.inputs()[i].type;
    const auto& y = b.inputs()[i].type;
    if (x.shape != y.shape || !relabel(x.dtype, y.dtype)) return false;
  }

  // Canonical names: inputs by position, nodes by position, initializers by
  // order of first use.
  struct Canon {
    std::map<std::string, std::string, std::less<>> names;
    std::size_t initializers = 0;
  };
  Canon ca, cb;
  for (std::size_t i = 0; i < a.inputs().size(); ++i) {
    ca.names[a.inputs()[i].name] = "i" + std::to_string(i);
    cb.names[b.inputs()[i].name] = "i" + std::to_string(i);
  }
  auto canonical = [](Canon& c, const std::string& value) {
    auto it = c.names.find(value);
    if (it != c.names.end()) return it->second;
    // Not yet named, so an initializer on its first use.
    std::string label = "w" + std::to_string(c.initializers++);
    c.names.emplace(value, label);
    return label;
  };

  for (std::size_t n = 0; n < a.nodes().size(); ++n) {
    const Node& x = a.nodes()[n];
    const Node& y = b.nodes()[n];
    if (x.op != y.op || x.inputs.size() != y.inputs.size()) return false;
    for (std::size_t k = 0; k < x.inputs.size(); ++k) {
      const auto* vx = a.find(x.inputs[k]);
      const auto* vy = b.find(y.inputs[k]);
      if (vx->source != vy->source) return false;
      if (canonical(ca, x.inputs[k]) != canonical(cb, y.inputs[k])) return false;
      if (vx->source == MiniModel::Source::Initializer &&
          (vx->type.shape != vy->type.shape || !relabel(vx->type.dtype, vy->type.dtype))) {
        return false;
      }
    }
    ca.names[x.output] = "n" + std::to_string(n);
    cb.names[y.output] = "n" + std::to_string(n);
  }

  for (std::size_t i = 0; i < a.outputs().size(); ++i) {
    if (ca.names.at(a.outputs()[i]) != cb.names.at(b.outputs()[i])) return false;
  }
  return true;
}

}  // namespace vnnlib::mini
