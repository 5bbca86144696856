"""Validate ppcan reports against docs/report.schema.json and check that reruns are byte-identical."""
import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["classify", "--group", "SL23", "--p", "3"],
    ["canind", "--group", "SL23", "--p", "3", "--module", "Y"],
    ["species", "--group", "A4", "--p", "2"],
    ["idempotents", "--group", "S3", "--p", "3"],
    ["verify", "--group", "D8", "--p", "2"],
    ["verify", "--corpus", "small", "--p", "2"],
    ["counterexample-sl23"],
]


def main(binary, schema_path):
    with open(schema_path) as f:
        schema = json.load(f)
    for args in RUNS:
        first = subprocess.run([binary, *args], capture_output=True, check=True).stdout
        second = subprocess.run([binary, *args], capture_output=True, check=True).stdout
        if first != second:
            sys.exit(f"non-deterministic output for {args}")
        report = json.loads(first)
        jsonschema.validate(report, schema)
        if report["command"] == "canind":
            for entry in report["results"]["can"]:
                jsonschema.validate(entry, schema["$defs"]["canind_entry"])
        print("ok", " ".join(args))


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
