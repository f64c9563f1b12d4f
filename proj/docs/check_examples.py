"""Regenerate every docs/examples/*.el report with the CLI, compare it with the
stored JSON byte for byte, and validate it against report.schema.json."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    cli = sys.argv[1]
    docs = pathlib.Path(__file__).resolve().parent
    schema = json.loads((docs / "report.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    inputs = sorted((docs / "examples").glob("*.el"))
    for path in inputs:
        out = subprocess.run([cli, "analyze", str(path), "--json"], capture_output=True, text=True, check=False)
        stored = path.with_suffix(".json").read_text()
        problems = []
        if out.returncode != 0:
            problems.append(f"exit code {out.returncode}")
        if out.stdout != stored:
            problems.append("output differs from the stored example")
        problems += [e.message for e in validator.iter_errors(json.loads(out.stdout))]
        print(("FAIL " if problems else "ok   ") + path.name)
        for p in problems:
            print("     " + p)
        failures += bool(problems)
    if not inputs:
        print("no examples found")
        return 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
