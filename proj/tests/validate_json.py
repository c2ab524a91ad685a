"""Runs the CLI in JSON mode and validates every document against the report schema."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def run(cli, *args):
    proc = subprocess.run([cli, "--format", "json", *args], capture_output=True, text=True)
    return proc.returncode, json.loads(proc.stdout)


def main():
    cli, data = sys.argv[1], Path(sys.argv[2])
    schema = json.loads((data / "schema" / "ramlab-report.schema.json").read_text())
    validator = jsonschema.Draft202012Validator(schema)
    suite = jsonschema.Draft202012Validator({"$defs": schema["$defs"], "$ref": "#/$defs/suite"})
    covers = data / "covers"

    cases = [
        ["classes", "--group", "S(4)"],
        ["gexp", "--group", "PGL(2,7)"],
        ["rigid", "--group", "PGL(2,7)", "--classes", "1,4,6"],
        ["coprime-criterion", "--group", "PGL(2,7)", "--classes", "1,4,6"],
        ["branch", "--cover", str(covers / "psl2_11.poly")],
        ["ramtype", "--cover", str(covers / "psl2_11.ratmap")],
        ["pullback", "--type", "2,2,3@inf,5@0", "--d", "3", "--at", "0,inf"],
        ["predict", "--cover", str(covers / "psl2_11.poly"), "--a", "1"],
        ["udisc", "--cover", str(covers / "square.poly"), "--as", "2,3"],
        ["specialize", "--cover", str(covers / "square.poly"), "--avoid", "2,3", "--count", "3"],
        ["rigid", "--group", "S(4)", "--orders", "2,3,4"],
    ]
    failures = 0
    for args in cases:
        code, doc = run(cli, *args)
        errors = [e.message for e in validator.iter_errors(doc)]
        if doc["ok"] != (code == 0):
            errors.append(f"ok={doc['ok']} but exit code {code}")
        status = "ok" if not errors else "FAIL " + "; ".join(errors)
        print(f"{' '.join(args[:1])}: {status}")
        failures += bool(errors)

    # JSON is the default format
    proc = subprocess.run([cli, "gexp", "--group", "A(5)"], capture_output=True, text=True)
    errors = [e.message for e in validator.iter_errors(json.loads(proc.stdout))]
    print(f"default format: {'ok' if not errors else 'FAIL ' + '; '.join(errors)}")
    failures += bool(errors)

    code, doc = run(cli, "suite", "--nightly")
    errors = [e.message for e in validator.iter_errors(doc)]
    errors += [e.message for e in suite.iter_errors(doc["result"])]
    print(f"suite: {'ok' if not errors else 'FAIL ' + '; '.join(errors[:5])}")
    failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
