"""Runs `dnlift detect-loops --format json` on every corpus program and
validates the output against the report schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    binary, schema_path, programs = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    validator = jsonschema.Draft202012Validator(json.loads(schema_path.read_text()))
    failures = 0
    for program in sorted(programs.glob("*.pl")):
        run = subprocess.run([binary, "--format", "json", "detect-loops", str(program)],
                             capture_output=True, text=True, check=False)
        if run.returncode != 0:
            print(f"FAIL {program.name}: exit {run.returncode}: {run.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(run.stdout)))
        for e in errors:
            print(f"FAIL {program.name}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {program.name}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
