"""Validate the JSON report of every scenario against docs/report.schema.json."""
import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path, scenario_dir = sys.argv[1:4]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for scn in sorted(pathlib.Path(scenario_dir).glob("*.scn")):
        out = subprocess.run([cli, "analyze", str(scn), "--emit", "json"], capture_output=True, text=True)
        if out.returncode != 0:
            print(f"{scn.name}: exit {out.returncode}: {out.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(out.stdout)))
        for e in errors:
            print(f"{scn.name}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
        failures += bool(errors)
        print(f"{scn.name}: {'invalid' if errors else 'valid'}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
