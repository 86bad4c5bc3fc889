"""CLI contract: exit codes, JSON schemas, byte-determinism."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

CLI = sys.argv[1]
ROOT = Path(sys.argv[2])
FIX = ROOT / "fixtures"
SCHEMAS = {p.name.split(".")[0]: json.loads(p.read_text()) for p in (ROOT / "schemas").glob("*.schema.json")}

failures = []


def run(*args):
    p = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def expect(cond, what):
    print(("ok    " if cond else "FAIL  ") + what)
    if not cond:
        failures.append(what)


def leading_json(text):
    return json.JSONDecoder().raw_decode(text)[0]


def validates(schema, doc, what):
    try:
        jsonschema.validate(doc, SCHEMAS[schema])
        expect(True, what)
    except jsonschema.ValidationError as e:
        expect(False, f"{what}: {e.message}")


# exit codes
for args, code in [
    (("check", "mo2"), 0),
    (("check", FIX / "o6.lat"), 1),
    (("check", FIX / "mo2xmo2.lat"), 0),
    (("center", "bool1*mo2"), 0),
    (("diamond", "mo2", "a1"), 0),
    (("blocks", FIX / "mo3.lat"), 0),
    (("global", "mo3"), 0),
    (("global", FIX / "parity18.greechie"), 1),
    (("global", FIX / "girth5_13.greechie"), 1),
    (("global", FIX / "d2.rays"), 0),
    (("mks", FIX / "girth5_13.greechie"), 0),
    (("mks", "mo2*mo2"), 0),
    (("square", "mo2", "a1"), 0),
    (("square", FIX / "pentagon.greechie", "c0", "--block", "1"), 0),
    (("sweep", "bool1*mo3", "--threads", "3"), 0),
    (("from-rays", FIX / "cabello18.rays"), 0),
    (("paste", FIX / "chain2.greechie"), 0),
    (("export-dot", FIX / "parity18.greechie"), 0),
    (("check", "nonexistent"), 2),
    (("diamond", "o6", "a1"), 2),
    (("diamond", "mo2", "zz"), 2),
    (("square", "mo2", "a1", "--block", "2"), 2),
    (("square", "mo2", "a1", "--format", "xml"), 2),
    (("mks", FIX / "parity18.greechie"), 2),
    (("from-rays", FIX / "mo2.lat"), 2),
    ((), 2),
]:
    got, _, err = run(*args)
    expect(got == code, f"exit {code} for {' '.join(map(str, args)) or '(no args)'} (got {got}) {err.strip()[:80]}")

for bad in sorted((FIX / "malformed").iterdir()):
    code, _, err = run("export-dot", bad)
    expect(code == 2 and "line " in err, f"malformed {bad.name} gives exit 2 with a position")

# schemas
validates("axiom-report", json.loads(run("check", FIX / "o6.lat", "--json")[1]), "check --json matches schema")
validates("axiom-report", json.loads(run("check", "bool3", "--json")[1]), "check --json (passing) matches schema")
validates("center", json.loads(run("center", "mo2*mo2", "--json")[1]), "center --json matches schema")
validates("diamond", json.loads(run("diamond", "bool1*mo2", "(1,a1)", "--json")[1]), "diamond --json matches schema")
validates("blocks", json.loads(run("blocks", "mo3", "--json")[1]), "blocks --json matches schema")
for src in ["mo2", FIX / "parity18.greechie", FIX / "d3.rays"]:
    validates("global", json.loads(run("global", src)[1]), f"global {Path(str(src)).name} matches schema")
for src in ["mo2", "bool3", FIX / "girth5_13.greechie"]:
    validates("mks", json.loads(run("mks", src)[1]), f"mks {Path(str(src)).name} matches schema")
for args in [("mo2", "a1"), ("bool2", "a1"), ("bool1*mo2", "(1,a1)")]:
    validates("square", json.loads(run("square", *args, "--format", "json")[1]), f"square {' '.join(args)} matches schema")

# documented examples
sq = leading_json(run("square", "mo2", "a1")[1])
expect(sq["collapsed"] is False and sq["all_hold"], "square mo2 a1: four relations hold, not collapsed")
expect(all(sq["relations"][k]["holds"] for k in sq["relations"]), "square mo2 a1: every relation holds")
text = run("square", "mo2", "a1", "--format", "text")[1]
expect("contraries [ok]" in text and "subcontraries [ok]" in text, "square text diagram")
g = json.loads(run("global", FIX / "parity18.greechie")[1])
expect(g["sat"] is False and g["parity_certificate"]["contexts"] == 9, "parity18 UNSAT with certificate")
check = run("check", FIX / "o6.lat")[1]
expect("orthomodular  FAILS" in check and "witness (a1, ¬a2)" in check, "o6 orthomodular counterexample")
dot = run("export-dot", "mo2")[1]
expect(dot.count(" -- ") == 8 and dot.count("[label=") == 6, "MO2 Hasse diagram has 6 nodes and 8 edges")
fr = run("from-rays", FIX / "d2.rays")[1]
expect(fr.splitlines()[-2:] == ["  x y", "  p m"], "from-rays d2 lists the two contexts")

# determinism
for args in [("square", "mo2*mo2", "(a1,1)"), ("mks", "mo2*mo2"), ("export-dot", FIX / "girth5_13.greechie"),
             ("global", FIX / "parity18.greechie")]:
    expect(run(*args)[1] == run(*args)[1], f"byte-identical output for {args[0]}")
expect(run("sweep", "mo2*mo2", "--threads", "1")[1] == run("sweep", "mo2*mo2", "--threads", "6")[1],
       "sweep output independent of thread count")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
