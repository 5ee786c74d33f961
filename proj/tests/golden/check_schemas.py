"""Validates the --json output of every exit-0 golden case against the shipped schema.

Usage: check_schemas.py CLI REPO_ROOT
"""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def main():
    cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name: json.loads(p.read_text()) for p in (root / "schemas").glob("*.json")}
    registry = Registry().with_resources(
        (name, Resource.from_contents(schema)) for name, schema in schemas.items())
    report_schema = schemas["run-report.schema.json"]
    validator = jsonschema.Draft202012Validator(report_schema, registry=registry)
    failures = 0
    cases = json.loads((root / "tests" / "golden" / "cases.json").read_text())
    extra = [{"name": "timing", "args": ["graph", "tutte", "Km:4", "--timing"]}]
    for case in cases + extra:
        if case.get("exit", 0) != 0:
            continue
        proc = subprocess.run([cli, *case["args"], "--json"], cwd=root, capture_output=True, text=True,
                              timeout=600)
        try:
            validator.validate(json.loads(proc.stdout))
            print(f"{case['name']}: ok")
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            failures += 1
            print(f"{case['name']}: FAIL: {e}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
