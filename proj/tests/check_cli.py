#!/usr/bin/env python3
"""Runs every CLI subcommand with --json, validates the output against the
schemas in the given directory and checks that reruns are byte-identical.

usage: check_cli.py <edcurve binary> <fixture dir> <schema dir>
"""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def load_registry(schema_dir):
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        schemas[path.name] = json.loads(path.read_text())
    registry = Registry().with_resources(
        (name, Resource.from_contents(s)) for name, s in schemas.items())
    return schemas, registry


def run(cli, args, expect_rc=0):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    if proc.returncode != expect_rc:
        raise AssertionError(f"{args}: exit {proc.returncode}, wanted {expect_rc}\n{proc.stderr}")
    return proc.stdout


def main():
    cli, inputs, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    schemas, registry = load_registry(schema_dir)
    i = lambda name: str(inputs / name)

    cases = [
        ("report", ["eddeg", "--curve", i("twisted_cubic.json"), "--cameras", i("one_generic.json"), "--seed", "3"], 0),
        ("report", ["eddeg", "--curve", i("cuspidal_cubic.json"), "--cameras", i("cusp_camera.json")], 0),
        ("sweep", ["sweep", "--e", "1..2", "--n", "1..2", "--h", "2,3", "--seed", "5"], 0),
        ("sweep", ["sweep", "--curve", i("cuspidal_cubic.json"), "--n", "1"], 3),
        ("sweep", ["sweep", "--family", "monomial", "--e", "3", "--n", "1..4", "--retries", "0"], 2),
        ("l3", ["l3", "--n", "1..3", "--h", "2,3"], 0),
        ("scroll", ["scroll", "--bezier1", i("bezier_segment_a.json"), "--bezier2", i("bezier_quadratic.json")], 0),
        ("triangulate", ["triangulate", "--curve", i("twisted_cubic.json"), "--cameras", i("one_generic.json"),
                         "--data", i("data_one_view.json")], 0),
        ("triangulate", ["triangulate", "--curve", i("line.json"), "--cameras", i("one_generic.json"), "--seed", "4"], 0),
        ("wedge", ["wedge", "--cameras", i("wedge_example.json")], 0),
        ("wedge", ["wedge", "--cameras", i("one_generic.json"), "--order", "colex", "--k", "3"], 0),
        ("multidegree", ["multidegree", "--factor", "T1+T2", "--factor", "2*T1+T3"], 0),
    ]
    failures = 0
    for kind, args, rc in cases:
        try:
            first = run(cli, [*args, "--json"], rc)
            second = run(cli, [*args, "--json"], rc)
            if first != second:
                raise AssertionError(f"{args}: output differs between runs")
            validator = jsonschema.Draft202012Validator(schemas[f"{kind}.schema.json"], registry=registry)
            errors = sorted(validator.iter_errors(json.loads(first)), key=str)
            if errors:
                raise AssertionError(f"{args}: {errors[0].message} at {list(errors[0].absolute_path)}")
            print(f"ok    {kind:12s} {' '.join(args[:1])}")
        except AssertionError as exc:
            failures += 1
            print(f"FAIL  {kind:12s} {exc}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
