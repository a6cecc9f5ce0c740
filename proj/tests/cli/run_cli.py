#!/usr/bin/env python3
"""End-to-end checks of the bmsign command-line tool.

usage: run_cli.py BMSIGN_BINARY REPO_ROOT CASE
"""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, ROOT, CASE = sys.argv[1], sys.argv[2], sys.argv[3]

with open(os.path.join(ROOT, "schemas", "report.v1.schema.json")) as fh:
    REPORT_SCHEMA = json.load(fh)
with open(os.path.join(ROOT, "schemas", "structure.v1.schema.json")) as fh:
    STRUCTURE_SCHEMA = json.load(fh)


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("BMSIGN_REPORT_DIR", None)
    full_env.update(env or {})
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env, timeout=300)


def expect(cond, msg):
    if not cond:
        print("FAILED:", msg)
        sys.exit(1)


def expect_rc(r, rc):
    expect(r.returncode == rc, f"exit code {r.returncode}, wanted {rc}\nstdout:\n{r.stdout}\nstderr:\n{r.stderr}")


def report(*args, rc=0):
    r = run(*args, "--json")
    expect_rc(r, rc)
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, REPORT_SCHEMA)
    expect(doc["status"] == ("pass" if rc == 0 else "fail"), "status field disagrees with exit code")
    return doc, r.stdout


def data(name):
    return os.path.join(ROOT, "data", name)


def case_nov_eval():
    r = run("nov-eval", "(1+T^(1/2))*(1-T^(1/2))")
    expect_rc(r, 0)
    expect(r.stdout == "1 - T\n", repr(r.stdout))
    expect_rc(run("nov-eval", "1 + T^(-1)"), 2)


def case_prove_signs():
    doc, text = report("prove-signs", "--k-max", "6")
    expect(len(doc["checks"]) > 300, "too few instances")
    expect(all(c["status"] == "pass" for c in doc["checks"]), "an identity failed")
    _, again = report("prove-signs", "--k-max", "6")
    expect(text == again, "report is not byte-identical across runs")


def case_prove_signs_usage():
    r = run("prove-signs", "--k-max", "0")
    expect_rc(r, 2)
    expect("k-max" in r.stderr, r.stderr)
    expect_rc(run("prove-signs", "--k-max", "x"), 2)
    expect_rc(run("no-such-command"), 2)
    expect_rc(run(), 2)


def case_check_dga():
    doc, _ = report("check-dga", "--preset", "exterior4", "--k-max", "4")
    expect([c["id"] for c in doc["checks"]] == [f"relation[k={k}]" for k in range(5)], doc["checks"])
    report("check-dga", "--preset", "interval-circle", "--k-max", "4")
    report("check-dga", "--preset", "heisenberg3", "--k-max", "3")


def case_check_dga_flipped():
    doc, _ = report("check-dga", "--preset", "exterior4", "--k-max", "3", "--rule", "0001", rc=1)
    failed = [c for c in doc["checks"] if c["status"] == "fail"]
    expect(failed and "tuple" in failed[0]["witness"], "no witness tuple")
    expect_rc(run("check-dga", "--preset", "nonsense"), 2)
    expect_rc(run("check-dga", "--rule", "012"), 2)


def case_check_ainfty():
    report("check-ainfty", "--file", data("unit_interval.json"), "--k-max", "4")
    report("check-ainfty", "--file", data("interval_circle.json"), "--k-max", "3")
    doc, _ = report("check-ainfty", "--file", data("broken_unit.json"), "--k-max", "3", rc=1)
    expect(any("witness" in c for c in doc["checks"]), "failure without witness")
    for name in ["unit_interval.json", "broken_unit.json", "interval_circle.json"]:
        with open(data(name)) as fh:
            jsonschema.validate(json.load(fh), STRUCTURE_SCHEMA)


def case_check_ainfty_errors():
    r = run("check-ainfty", "--file", data("bad_syntax.json"))
    expect_rc(r, 2)
    expect("line 4, column" in r.stderr, r.stderr)
    r = run("check-ainfty", "--file", data("bad_reference.json"))
    expect_rc(r, 2)
    expect("/operations/0/values/0/in/1" in r.stderr, r.stderr)
    expect_rc(run("check-ainfty", "--file", data("missing.json")), 2)
    expect_rc(run("check-ainfty", "--file", data("unit_interval.json"), "--cutoff", "0"), 2)


def case_dga_export_roundtrip():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "ext.json")
        expect_rc(run("check-dga", "--preset", "exterior4", "--k-max", "1", "--export", path), 0)
        with open(path) as fh:
            jsonschema.validate(json.load(fh), STRUCTURE_SCHEMA)
        report("check-ainfty", "--file", path, "--k-max", "3")


def case_deform_check():
    doc, _ = report("deform-check", "--preset", "heisenberg3", "--b", "z=T^(1/2); x=T",
                    "--lambda-min", "1/2", "--k-max", "3")
    expect(doc["data"]["m0"] == {"xy": "T^(1/2)"}, doc["data"]["m0"])
    expect(doc["parameters"]["cutoff"] == "2", doc["parameters"])
    r = run("deform-check", "--preset", "heisenberg3", "--b", "xy=T", "--lambda-min", "1/2")
    expect_rc(r, 2)
    expect("odd shifted degree" in r.stderr, r.stderr)
    expect_rc(run("deform-check", "--preset", "heisenberg3", "--b", "z=T^(1/4)", "--lambda-min", "1/2"), 2)


def case_verify_geomodel():
    doc, text = report("verify-geomodel", "--trials", "60", "--seed", "7")
    expect(doc["parameters"]["seed"] == 7, "seed not recorded")
    expect(len(doc["checks"]) == 9, doc["checks"])
    expect(all(doc["data"][c["id"]]["trials"] == 60 for c in doc["checks"]), "trial counts")
    _, again = report("verify-geomodel", "--trials", "60", "--seed", "7")
    expect(text == again, "report is not byte-identical across runs")
    expect_rc(run("verify-geomodel", "--trials", "0"), 2)


def case_enumerate_strata():
    doc, _ = report("enumerate-strata", "--k", "3", "--energy", "1", "--spectrum", "0,1/2,1")
    strata = doc["data"]["strata"]
    expect(len(strata) > 0, "no strata")
    expect(all(s["kappa"] in (0, 1) and s["codim_one_consistent"] for s in strata), "bad stratum record")
    expect({c["id"]: c["status"] for c in doc["checks"]} == {"codim-one-parity": "pass", "pairing": "pass"},
           doc["checks"])
    expect_rc(run("enumerate-strata", "--k", "3", "--energy", "1/3", "--spectrum", "0,1/2,1"), 2)
    expect_rc(run("enumerate-strata", "--spectrum", "1/2,1"), 2)


def case_replay_theorem():
    doc, _ = report("replay-theorem", "--k-max", "4", "--spectrum", "0,1/2,1")
    expect(len(doc["checks"]) == 5, doc["checks"])
    doc, _ = report("replay-theorem", "--k-max", "2", "--spectrum", "0,1", "--flip-term", "B=1:PUSH_D[j=1]", rc=1)
    expect(any("uncancelled" in c.get("witness", "") for c in doc["checks"]), doc["checks"])


def case_anf():
    r = run("anf", "--expr", "(a+b)*(a+1)")
    expect_rc(r, 0)
    expect(r.stdout.strip() == "b + a*b", r.stdout)
    expect_rc(run("anf", "--expr", "a*b+a", "--equals", "a*(b+1)"), 0)
    r = run("anf", "--expr", "a*b", "--equals", "a")
    expect_rc(r, 1)
    expect("at" in r.stdout, r.stdout)
    expect_rc(run("anf", "--expr", "a*(b"), 2)


def case_report_output():
    with tempfile.TemporaryDirectory() as tmp:
        r = run("check-dga", "--k-max", "2", env={"BMSIGN_REPORT_DIR": tmp})
        expect_rc(r, 0)
        path = os.path.join(tmp, "check-dga.json")
        expect(os.path.exists(path), "report dir ignored")
        with open(path) as fh:
            doc = json.load(fh)
        jsonschema.validate(doc, REPORT_SCHEMA)
        expect("runtime_s" not in doc, "runtime recorded without --timings")
        out = os.path.join(tmp, "explicit.json")
        expect_rc(run("check-dga", "--k-max", "2", "--timings", "--out", out), 0)
        with open(out) as fh:
            doc = json.load(fh)
        jsonschema.validate(doc, REPORT_SCHEMA)
        expect("runtime_s" in doc and all("runtime_s" in c for c in doc["checks"]), "timings missing")


CASES = {name[len("case_"):]: fn for name, fn in globals().items() if name.startswith("case_")}

if CASE not in CASES:
    print("unknown case", CASE, "; known:", " ".join(sorted(CASES)))
    sys.exit(2)
CASES[CASE]()
print("ok", CASE)
