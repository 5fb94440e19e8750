"""Run each subcommand once and validate its JSON report against the schema."""

import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["oracle", "--samples", "200"],
    ["oracle", "--samples", "50", "--corrupt-bracket"],
    ["lemma0", "--samples", "50"],
    ["lemma1", "--samples", "200"],
    ["theorem1", "--samples", "200"],
    ["wilking", "--samples", "50"],
    ["baseline", "--samples", "200"],
    ["classify", "--x=0,0,0,1,0,0,0,0,0", "--y=0,0,0,0,0,0,0,1,0"],
]


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    bad = 0
    for args in RUNS:
        proc = subprocess.run([exe, *args], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            print(f"{args[0]}: exit {proc.returncode}: {proc.stderr.strip()}")
            bad += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for e in errors:
            print(f"{' '.join(args)}: {e.json_path}: {e.message}")
        bad += bool(errors)
    print(f"{len(RUNS) - bad}/{len(RUNS)} reports valid")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
