#!/usr/bin/env python3
"""Validate fixtures and every JSON artifact the CLI writes against the shipped schemas."""

import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema


def load(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cli", required=True, help="path to the heckeaf executable")
    ap.add_argument("--schemas", required=True, type=pathlib.Path)
    ap.add_argument("--fixtures", required=True, type=pathlib.Path)
    ap.add_argument("--extra-fixture", action="append", default=[], type=pathlib.Path,
                    help="fixture that must be rejected; its error report is validated")
    ap.add_argument("--work", required=True, type=pathlib.Path)
    args = ap.parse_args()

    validators = {}
    for name in ("newform", "run_report", "bratteli"):
        schema = load(args.schemas / f"{name}.schema.json")
        jsonschema.Draft202012Validator.check_schema(schema)
        validators[name] = jsonschema.Draft202012Validator(schema)

    args.work.mkdir(parents=True, exist_ok=True)
    failures = []

    def check(kind, path):
        errors = sorted(validators[kind].iter_errors(load(path)), key=lambda e: list(e.path))
        status = "ok" if not errors else f"{len(errors)} error(s)"
        print(f"{kind:10s} {path.name}: {status}")
        for e in errors[:5]:
            failures.append(f"{path}: {'/'.join(map(str, e.path))}: {e.message}")

    def cli(*argv, expect=0):
        r = subprocess.run([args.cli, *map(str, argv)], capture_output=True, text=True)
        if r.returncode != expect:
            failures.append(f"{' '.join(map(str, argv))}: exit {r.returncode}, expected {expect}\n{r.stderr}")
        return r

    fixtures = sorted(args.fixtures.glob("*.json"))
    if not fixtures:
        failures.append(f"no fixtures in {args.fixtures}")
    for fx in fixtures:
        check("newform", fx)
        report = args.work / f"{fx.stem}.report.json"
        export = args.work / f"{fx.stem}.bratteli.json"
        cli("af", fx, "--conjugates", "--report", report, "--export", "json", export)
        check("run_report", report)
        check("bratteli", export)

    for fx in args.extra_fixture:
        report = args.work / f"{fx.stem}.report.json"
        cli("af", fx, "--report", report, expect=2)
        check("run_report", report)

    jpa_cases = {
        "golden": ["0,1", "--poly", "x^2+x-1"],
        "cube_root_cut": ["0,1,0", "0,0,1", "--poly", "x^3-2", "--max-steps", "3"],
        "cube_root": ["0,1,0", "0,0,1", "--poly", "x^3-2"],
    }
    for name, argv in jpa_cases.items():
        export = args.work / f"jpa_{name}.json"
        cli("jpa", *argv, "--export", "json", export)
        check("bratteli", export)

    if failures:
        print("\n".join(failures), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
