#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""End-to-end checks of the supergr CLI: schema validity of every JSON
payload, text/json agreement, json-lines framing and exit codes."""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["volume", "1", "1", "2", "2"],
    ["volume", "2", "1", "4", "2"],
    ["volume", "2", "0", "3", "4"],
    ["qvolume", "1", "2"],
    ["qvolume", "2", "5"],
    ["sdim", "2", "0", "3", "4"],
    ["dims", "1", "1", "2", "2"],
    ["defect", "gl", "3", "2"],
    ["defect", "osp", "3", "2"],
    ["defect", "d21a", "1/2"],
    ["defect", "g3"],
    ["defect", "f4"],
    ["c-table", "--max-n", "6"],
    ["c-table", "--max-n", "6", "--brute"],
    ["localize", "2", "5"],
    ["localize", "2", "4", "--mode", "gl"],
    ["localize", "1", "3", "--params", "1,2,5"],
    ["splitting", "gl", "1", "1", "2", "2"],
    ["splitting", "gl", "2", "0", "3", "4"],
    ["splitting", "q", "1", "2"],
    ["chain", "GL", "3", "2"],
    ["chain", "Q", "7"],
    ["chain", "GL(2|1)"],
    ["casimir", "g12"],
    ["casimir", "f31"],
    ["casimir", "osp", "--m", "1", "--n", "3"],
    ["casimir", "g12", "1", "1", "--basis", "fundamental"],
    ["verify", "--max-n", "3", "--max-n-c", "6"],
]

DOMAIN_ERRORS = [
    ["defect", "q", "3"],
    ["casimir", "osp", "--m", "3", "--n", "2"],
]

USAGE_ERRORS = [
    [],
    ["frobnicate"],
    ["volume", "1", "1", "2"],
    ["volume", "3", "0", "2", "2"],
    ["volume", "a", "1", "2", "2"],
    ["c-table", "--max-n", "x"],
]

failures = []


def fail(msg):
    failures.append(msg)
    print("FAIL", msg)


def run(binary, args):
    p = subprocess.run([binary, *args], capture_output=True, text=True, timeout=120)
    return p.returncode, p.stdout, p.stderr


def flatten(value, key, out):
    if isinstance(value, dict):
        for k, v in value.items():
            flatten(v, f"{key}.{k}" if key else k, out)
    elif isinstance(value, list):
        if all(not isinstance(x, (dict, list)) for x in value):
            out[key] = "[" + ", ".join(scalar(x) for x in value) + "]"
        else:
            for i, x in enumerate(value):
                flatten(x, f"{key}[{i}]", out)
    else:
        out[key] = scalar(value)


def scalar(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return "null"
    return str(x)


def parse_text(text):
    lines = text.rstrip("\n").split("\n")
    fields = {}
    for line in lines[1:]:
        key, _, value = line.partition(": ")
        fields[key] = value
    return fields


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)

    for args in COMMANDS:
        label = " ".join(args)
        code, out, err = run(binary, [*args, "--format", "json"])
        if code != 0:
            fail(f"{label}: exit {code}: {err.strip()}")
            continue
        doc = json.loads(out)
        for e in validator.iter_errors(doc):
            fail(f"{label}: schema: {e.message} at {list(e.absolute_path)}")
        if doc["command"]["verb"] != args[0] or doc["command"]["args"] != args[1:]:
            fail(f"{label}: command echo mismatch")

        code, text, _ = run(binary, args)
        expected = {}
        flatten(doc["result"], "", expected)
        if code != 0 or parse_text(text) != expected:
            fail(f"{label}: text rendering differs from json")

        code, lines, _ = run(binary, [*args, "--format", "jsonl"])
        records = [json.loads(line) for line in lines.splitlines()]
        if code != 0 or not records:
            fail(f"{label}: jsonl produced no records")
        elif args[0] in ("c-table", "verify"):
            rows = doc["result"]["rows" if args[0] == "c-table" else "suites"]
            if [r["record"] for r in records] != rows or any(r["verb"] != args[0] for r in records):
                fail(f"{label}: jsonl records differ from json rows")
        elif records != [doc]:
            fail(f"{label}: jsonl envelope differs from json")

    for args in DOMAIN_ERRORS:
        label = " ".join(args)
        code, out, _ = run(binary, [*args, "--format", "json"])
        if code != 1:
            fail(f"{label}: expected exit 1, got {code}")
            continue
        doc = json.loads(out)
        for e in validator.iter_errors(doc):
            fail(f"{label}: error envelope schema: {e.message}")

    for args in USAGE_ERRORS:
        code, _, _ = run(binary, args)
        if code != 2:
            fail(f"{' '.join(args) or '<no args>'}: expected exit 2, got {code}")

    a = run(binary, ["verify", "--seed", "7", "--max-n", "3", "--format", "json"])
    b = run(binary, ["verify", "--seed", "7", "--max-n", "3", "--format", "json"])
    if a != b:
        fail("verify is not deterministic under a fixed seed")

    print(f"{len(COMMANDS)} commands, {len(DOMAIN_ERRORS)} domain errors, {len(USAGE_ERRORS)} usage errors checked;"
          f" {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
