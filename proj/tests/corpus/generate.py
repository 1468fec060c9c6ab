#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
#
# Copyright 2026 The vnnlib Authors
#
# Regenerates the model and assignment files of the test corpus.

import json
from pathlib import Path

HERE = Path(__file__).resolve().parent


def tensor(name, dtype, shape, data):
    return {"name": name, "dtype": dtype, "shape": shape, "data": [str(d) for d in data]}


def model(inputs, outputs, initializers, nodes):
    return {
        "format": "mini-nn-v1",
        "opset": 1,
        "inputs": [{"name": n, "dtype": d, "shape": s} for n, d, s in inputs],
        "outputs": outputs,
        "initializers": initializers,
        "nodes": [{"op": op, "inputs": ins, "outputs": [out]} for op, ins, out in nodes],
    }


def selector(rows, cols):
    return ["1" if r == c else "0" for r in range(rows) for c in range(cols)]


def write(name, doc, indent=2):
    (HERE / name).write_text(json.dumps(doc, indent=indent) + "\n")


def simple_net(dtype="float32", weights=None, bias=None):
    return model(
        [("x", dtype, [1, 10])],
        ["y"],
        [
            tensor("W", dtype, [10, 2], weights or selector(10, 2)),
            tensor("b", dtype, [1, 2], bias or ["0", "0"]),
        ],
        [("MatMul", ["x", "W"], "h"), ("Add", ["h", "b"], "y")],
    )


def main():
    write("simple_net.nn.json", simple_net())
    # Same graph and weights, different bytes.
    write("simple_net_copy.nn.json", simple_net(), indent=1)
    write("simple_net_retrained.nn.json",
          simple_net(weights=[f"0.{i + 1}" for i in range(20)], bias=["0.5", "-0.25"]))
    write("simple_net_float16.nn.json", simple_net("float16"))
    write("simple_net_3out.nn.json", model(
        [("x", "float32", [1, 10])], ["y"],
        [tensor("W", "float32", [10, 3], selector(10, 3))],
        [("MatMul", ["x", "W"], "y")]))
    write("mlp_relu.nn.json", model(
        [("x", "float32", [1, 10])], ["y"],
        [tensor("W", "float32", [10, 2], selector(10, 2)), tensor("b", "float32", [1, 2], ["0", "0"])],
        [("MatMul", ["x", "W"], "h"), ("Add", ["h", "b"], "a"), ("Relu", ["a"], "y")]))
    # Y[0,1] is constantly zero.
    write("zero_net.nn.json", model(
        [("x", "float32", [1, 10])], ["y"],
        [tensor("W", "float32", [10, 2], ["0"] * 20)],
        [("MatMul", ["x", "W"], "y")]))

    write("teacher.nn.json", model(
        [("tx", "float32", [1, 32])], ["ty"],
        [tensor("W1", "float32", [32, 4], [f"{((i * 7) % 11 - 5) / 8}" for i in range(128)]),
         tensor("W2", "float32", [4, 2], ["0.5", "-1", "0.25", "1", "-0.5", "0.75", "1", "0"])],
        [("MatMul", ["tx", "W1"], "h"), ("Relu", ["h"], "a"), ("MatMul", ["a", "W2"], "ty")]))
    write("student.nn.json", model(
        [("sx", "float16", [1, 32])], ["sy"],
        [tensor("W", "float16", [32, 2], [f"{((i * 3) % 5 - 2) / 4}" for i in range(64)]),
         tensor("b", "float16", [1, 2], ["0.125", "-0.125"])],
        [("MatMul", ["sx", "W"], "h"), ("Add", ["h", "b"], "sy")]))

    write("multi_io_net.nn.json", model(
        [("image", "float32", [1, 3, 224, 224]), ("metadata", "float32", [1, 10])],
        ["bbox", "logits"],
        [tensor("origin", "int16", [1, 4], ["0", "0", "16", "16"]),
         tensor("offset", "int16", [1, 4], ["4", "4", "4", "4"]),
         tensor("W", "float32", [10, 1000], [f"{(i % 7) - 3}" for i in range(10000)])],
        [("Add", ["origin", "offset"], "bbox"), ("MatMul", ["metadata", "W"], "logits")]))

    write("hidden_net.nn.json", model(
        [("x", "float32", [1, 8])], ["y"],
        [tensor("W1", "float32", [8, 4], selector(8, 4)),
         tensor("W2", "float32", [4, 2], ["1", "0", "0", "1", "1", "0", "0", "1"])],
        [("MatMul", ["x", "W1"], "hidden"), ("Relu", ["hidden"], "act"), ("MatMul", ["act", "W2"], "y")]))
    write("hidden_missing.nn.json", model(
        [("x", "float32", [1, 8])], ["y"],
        [tensor("W", "float32", [8, 2], selector(8, 2))],
        [("MatMul", ["x", "W"], "y")]))

    write("eps_net.nn.json", model(
        [("x", "float32", [1, 1])], ["y"],
        [tensor("eps", "float32", [1, 1], ["0.0000000001"])],
        [("Add", ["x", "eps"], "y")]))

    base = lambda dtype, b: model(
        [("p", dtype, [1, 2]), ("k", dtype, [])], ["q"],
        [tensor("b", dtype, [1, 2], b)],
        [("Add", ["p", "b"], "hidden"), ("Relu", ["hidden"], "q")])
    write("productions_base.nn.json", base("float64", ["0.5", "-1"]))
    write("productions_shaped.nn.json", base("float32", ["2", "3"]))

    ok = [0.0] * 10
    ok[1], ok[2] = 0.25, 0.5
    bad = [0.0] * 10
    bad[2] = 2.0

    def assignment(dtype, values, name="X", shape=(1, 10)):
        return {name: {"dtype": dtype, "shape": list(shape), "data": [repr(v) for v in values]}}

    write("ok.json", assignment("float32", ok))
    write("violated.json", assignment("float32", bad))
    write("ok_float64.json", assignment("float64", ok))
    write("ok_real.json", assignment("real", ok))
    write("divergence.json", assignment("float32", [1.0], "x", (1, 1)))
    write("divergence_real.json", assignment("real", [1.0], "x", (1, 1)))


if __name__ == "__main__":
    main()
