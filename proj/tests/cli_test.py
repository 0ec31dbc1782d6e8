"""CLI checks: outputs validate against the shipped schemas, forms round-trip,
exit codes follow the documented convention, and generate | classify | verify
succeeds for every case tag."""

import json
import pathlib
import subprocess
import sys

import jsonschema
import referencing

CLI = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])
MODE = sys.argv[3]

registry = referencing.Registry().with_resources(
    (p.name, referencing.Resource.from_contents(json.loads(p.read_text()))) for p in SCHEMAS.glob("*.schema.json")
)
failures = []


def run(args, stdin=None, expect=0):
    proc = subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)
    if expect is not None and proc.returncode != expect:
        failures.append(f"{args}: exit {proc.returncode}, expected {expect}\n{proc.stdout}{proc.stderr}")
    return proc.stdout


def records(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def validate(schema, record, label):
    validator = jsonschema.Draft202012Validator({"$ref": f"{schema}.schema.json"}, registry=registry)
    for err in validator.iter_errors(record):
        failures.append(f"{label}: {err.message} at {list(err.path)}")


def schemas():
    forms = ["d=5; [0,1,0,0,0,0]", "u^6 + t^6", "u^3 - 3*u*t^2", "d=7; [1,2,-3,4,5/2,6,7,8]", "u^4*t^3"]
    for f in forms:
        cert = records(run(["rank", f]))[0]
        validate("certificate", cert, f"rank {f}")
        validate("borderrank", records(run(["borderrank", f]))[0], f"borderrank {f}")
        # Lossless round trip through the form JSON.
        form = records(run(["classify", f], expect=None))[0].get("form")
        if form is not None:
            again = records(run(["rank", json.dumps(form)]))[0]
            if again != cert:
                failures.append(f"round trip changed the certificate of {f}")
        if cert["witness"]["type"] == "squarefree":
            validate("decomposition", records(run(["decompose", f]))[0], f"decompose {f}")
            validate("verify_decomp", records(run(["verify-decomp", f]))[0], f"verify-decomp {f}")
    validate("border_scheme", records(run(["scheme", "u^4*t^3"]))[0], "scheme")
    validate("error", records(run(["scheme", "d=4; [1,-2,3,7,5]"], expect=1))[0], "ambiguous scheme")
    validate("error", records(run(["rank", "d=2; [1,2"], expect=2))[0], "parse error")
    validate("error", records(run(["project", "u^5*t"], expect=1))[0], "centre")
    run(["rank", "--precision", "12", "u^2"], expect=2)
    run(["nonsense"], expect=2)

    point = records(run(["project", "u^7 + 2*u^6*t + t^7"]))[0]
    validate("projected_point", point, "project")
    xr = records(run(["xrank", "--n", "6", "--coords", "1,0,0,0,0,0,1"]))[0]
    validate("xrank", xr, "xrank")
    if xr["value"] != 2:
        failures.append(f"xrank of u^7 + t^7 image: {xr['value']}")
    validate("xrank", records(run(["xrank", json.dumps(point)]))[0], "xrank json")

    for explain in ([], ["--explain"]):
        validate("verdict", records(run(["classify", "u^6 + 3*u^5*t", *explain]))[0], "classify")
    validate("instance", records(run(["generate", "--case", "e4_i", "--n", "6", "--rho", "2", "--seed", "1"]))[0], "generate")
    validate("error", records(run(["generate", "--case", "e4_i", "--n", "6", "--rho", "4"], expect=2))[0], "bad case")
    validate("secant", records(run(["probe", "--kind", "secant", "--s", "2", "--n", "5"]))[0], "secant")
    validate("fuzz", records(run(["probe", "--kind", "fuzz", "--degree", "5", "--samples", "50"]))[0], "fuzz")
    validate("span_search", records(run(["probe", "--kind", "search", "--r", "2", "u^6 + t^6"]))[0], "search")
    for rec in records(run(["verify", "--suite", "--n-min", "5", "--n-max", "5", "--seeds", "1", "--fuzz-samples", "20"])):
        validate("check_record", rec, "suite")


def pipe():
    cases = {
        "e4_i": [(6, 2), (7, 3)], "e4_ii": [(6, 4), (7, 4)], "e4_iii": [(7, 5)], "e3_1_info": [(6, 3)],
        "e3_2": [(7, 3), (8, 4)], "e3_3_wminus1": [(7, 4)], "e3_3_wminus2": [(7, 4)], "e3_3_cusp": [(6, 2)],
        "e3_4_exact": [(7, 3)], "e3_4_interval": [(7, 4)], "e3_5": [(8, 4)],
    }
    for tag, cells in cases.items():
        for n, w in cells:
            for seed in range(2):
                gen = run(["generate", "--case", tag, "--n", str(n), "--w", str(w), "--seed", str(seed)])
                cls = run(["classify"], stdin=gen)
                verdict = records(cls)[0]
                if tag != "e3_1_info" and verdict["case_tag"] != tag:
                    failures.append(f"{tag} n={n} w={w} seed={seed} classified as {verdict['case_tag']}")
                for rec in records(run(["verify"], stdin=cls)):
                    if not rec["pass"]:
                        failures.append(f"{tag} n={n} w={w} seed={seed}: {rec}")
    verdict = records(run(["classify"], stdin=run(["generate", "--case", "e3_2", "--n", "7", "--w", "3", "--seed", "1"])))[0]
    if verdict["case_tag"] != "e3_2" or verdict["prediction"] != {"value": 7}:
        failures.append(f"generate e3_2 | classify gave {verdict}")


{"schemas": schemas, "pipe": pipe}[MODE]()
for f in failures:
    print(f)
print(f"{MODE}: {len(failures)} failures")
sys.exit(1 if failures else 0)
