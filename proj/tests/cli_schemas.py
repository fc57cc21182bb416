"""Runs the CLI, validates every JSON output against schemas/, rechecks every
emitted certificate through `zhu recheck`, and checks the exit-code contract.

usage: cli_schemas.py <zhu binary> <schemas dir>
"""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

zhu, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())
failures = []
rechecked = 0


def run(args, code):
    p = subprocess.run([zhu, *args], capture_output=True, text=True)
    if p.returncode != code:
        failures.append(f"{args}: exit {p.returncode}, expected {code}\n{p.stdout}{p.stderr}")
    return p.stdout


def certificates(doc):
    if isinstance(doc, dict):
        if {"presentation", "level", "target", "combination"} <= doc.keys():
            yield doc
        for v in doc.values():
            yield from certificates(v)
    elif isinstance(doc, list):
        for v in doc:
            yield from certificates(v)


def check(args, schema, code=0):
    out = run([*args, "--format", "json"], code)
    try:
        doc = json.loads(out)
    except json.JSONDecodeError as e:
        failures.append(f"{args}: not JSON ({e})")
        return None
    validator = jsonschema.Draft202012Validator(schemas[schema], registry=registry)
    for err in validator.iter_errors(doc):
        failures.append(f"{args}: {schema}: {err.message} at {list(err.absolute_path)}")
    global rechecked
    for cert in certificates(doc):
        rechecked += 1
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            json.dump(cert, f)
        res = json.loads(run(["recheck", f.name, "--format", "json"], 0) or "{}")
        if not res.get("valid"):
            failures.append(f"{args}: emitted certificate failed recheck")
        jsonschema.Draft202012Validator(schemas["recheck.schema.json"], registry=registry).validate(res)
    return doc


H, V = ["--algebra", "heisenberg"], ["--algebra", "virasoro"]
star = check([*H, "star", "a(-1)|0>", "a(-1)|0>", "--level", "0"], "element_result.schema.json")
if star and star["result"] != "a(-1)^2|0>":
    failures.append(f"star example gave {star['result']}")
check([*H, "normalize", "a(1)a(-2)a(-1)|0>"], "element_result.schema.json")
check([*V, "mode", "1", "L(-2)|0>", "L(-2)^2|0>"], "element_result.schema.json")
check([*V, "circle", "L(-2)|0>", "L(-3)|0>", "--level", "1"], "element_result.schema.json")
check([*H, "reduce", "a(-5)a(-1)|0>", "--level", "1", "--certificate"], "reduce.schema.json")
check([*V, "reduce", "L(-6)|0>", "--level", "1", "--certificate"], "reduce.schema.json")
check([*H, "membership", "a(-2)a(-1)|0> + a(-1)^2|0>", "--level", "0"], "membership.schema.json")
check([*V, "membership", "L(-3)|0> + 2 L(-2)|0>", "--level", "0"], "membership.schema.json")
check([*H, "membership", "a(-1)|0>", "--level", "1"], "membership.schema.json", code=1)
check([*H, "separation", "a(-1)|0>", "--level", "1"], "separation.schema.json")
check([*H, "separation", "a(-1)|0>", "--level", "0"], "separation.schema.json")
check([*V, "separation", "L(-2)|0>", "--level", "2"], "separation.schema.json")
check(["zero-mode", "a(-1)^2|0>", "--module", "fock", "--degree", "2"], "zero_mode.schema.json")
check([*V, "zero-mode", "L(-2)^2|0>", "--module", "verma", "--degree", "2", "--bind", "c=1/2"], "zero_mode.schema.json")
for name in ["heis_A0", "heis_A1", "heis_A1_fivevar", "vir_A0", "vir_A1"]:
    rep = check(["verify-presentation", name], "presentation_report.schema.json")
    if rep and not rep["pass"]:
        failures.append(f"{name} did not verify")
    check(["verify-presentation", name, "--print-spec"], "presentation_spec.schema.json")
check(["verify-identities"], "identity_report.schema.json")
check(["verify-identities", "--identity", "triple_binomial"], "identity_report.schema.json")
check(["verify-identities", "--identity", "cj", "--n-max", "3", "--j-min", "-5", "--j-max", "5"], "identity_report.schema.json")

# A spec file round trip: exported spec, edited to a non-relation, fails with 1.
spec = json.loads(run(["verify-presentation", "heis_A1", "--print-spec"], 0))
spec["relations"] = ["x^2 - y"]
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    json.dump(spec, f)
check(["verify-presentation", f.name], "presentation_report.schema.json", code=1)

# Exit code 2: usage and parse errors.
run(["star", "a(-1|0>", "a(-1)|0>"], 2)
run(["frobnicate"], 2)
run(["--bind", "q=1", "normalize", "|0>"], 2)
run(["--algebra", "sl2", "normalize", "|0>"], 2)
run(["verify-presentation", "no_such_spec"], 2)
run(["star", "a(-1)|0>", "a(-1)|0>", "--level", "-1"], 2)
err = subprocess.run([zhu, "normalize", "a(-1)) |0>"], capture_output=True, text=True).stderr
if "column" not in err:
    failures.append("parse error lacks a position: " + err)

if failures:
    print("\n".join(failures))
    sys.exit(1)
if rechecked < 10:
    print(f"only {rechecked} certificates seen")
    sys.exit(1)
print(f"all CLI outputs validate; {rechecked} emitted certificates recheck")
