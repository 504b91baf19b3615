#!/usr/bin/env python3
# Copyright 2026 The qalgo Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Runs the CLI end to end, validates every report against the schema and
checks exit codes and byte-identical reruns."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def run(binary, args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    validator = jsonschema.Draft202012Validator(json.loads(Path(schema_path).read_text()))
    failures = []

    def check(cond, what):
        if not cond:
            failures.append(what)
            print(f"FAIL: {what}")

    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        z8 = tmp / "z8.json"
        z8.write_text(json.dumps({"table": [[(i + j) % 8 for j in range(8)] for i in range(8)]}))
        s3 = tmp / "s3.txt"
        s3.write_text("(1,2,3)\n(1,2)\n")

        ok_runs = [
            ["dj", "--bits", "0110"],
            ["--mode", "distribution", "dj", "--bits", "00000000"],
            ["factor", "--N", "15", "--seed", "1"],
            ["factor", "--N", "21", "--seed", "4", "--no-precheck"],
            ["--mode", "distribution", "factor", "--N", "35", "--no-precheck"],
            ["period", "--N", "21", "--y", "4", "--variant", "exact", "--mode", "distribution"],
            ["period", "--N", "15", "--y", "7", "--no-precheck"],
            ["--mode", "distribution", "period", "--N", "15", "--y", "7", "--no-precheck"],
            ["grover", "--n", "3", "--marked", "5"],
            ["--mode", "distribution", "grover", "--n", "4", "--marked", "1,2,3", "--known-M"],
            ["count", "--n", "4", "--marked", "1,6,11,12", "--range-bits", "5"],
            ["--mode", "distribution", "count", "--n", "4", "--marked", "1,6,11,12", "--range-bits", "5"],
            ["group-order", "--table", str(z8), "--chain", "4;2;1"],
            ["--mode", "distribution", "group-order", "--perms", str(s3), "--chain", "(1,2,3);(1,2)"],
            ["qft-check", "--n", "4"],
            ["qft-check", "--n", "3", "--dump-circuit", "--json-indent", "-1"],
        ]
        reports = {}
        for args in ok_runs:
            key = " ".join(args)
            code, out, err = run(binary, args)
            check(code == 0, f"exit code {code} for {key}: {err.strip()}")
            try:
                report = json.loads(out)
            except json.JSONDecodeError as exc:
                check(False, f"invalid JSON for {key}: {exc}")
                continue
            errors = sorted(validator.iter_errors(report), key=str)
            check(not errors, f"schema violations for {key}: {[e.message for e in errors[:3]]}")
            check(report.get("status") == "ok", f"status for {key}")
            _, again, _ = run(binary, args)
            check(out == again, f"rerun differs for {key}")
            reports[key] = report

        factor = reports.get("factor --N 15 --seed 1", {}).get("result", {})
        check(factor.get("factor") in (3, 5), "factor 15 must report 3 or 5")

        exact = reports.get("period --N 21 --y 4 --variant exact --mode distribution", {}).get("result", {})
        probs = exact.get("first_register_probs", {})
        check(sorted(probs) == ["0", "14", "7"], "exact period support")
        check(all(abs(p - 1 / 3) < 1e-10 for p in probs.values()), "exact period probabilities")

        qft = reports.get("qft-check --n 4", {}).get("result", {})
        check(qft.get("max_abs_diff", 1.0) < 1e-10, "qft-check difference")

        code_a, out_a, _ = run(binary, ["factor", "--N", "35", "--seed", "7", "--no-precheck"])
        code_b, out_b, _ = run(binary, ["factor", "--N", "35", "--seed", "8", "--no-precheck"])
        check(code_a == 0 and code_b == 0, "factor 35 with two seeds")

        # Algorithmic failure: JSON report with status failed and exit code 2.
        code, out, _ = run(binary, ["period", "--N", "21", "--y", "7"])
        check(code == 2, f"expected exit 2 for an aperiodic table, got {code}")
        try:
            report = json.loads(out)
            check(not list(validator.iter_errors(report)), "failed report must validate")
            check(report.get("status") == "failed", "failed status")
        except json.JSONDecodeError:
            check(False, "failed run must still print JSON")

        usage = [
            ["factor"],
            ["factor", "--N", "13"],
            ["--eps", "0.7", "dj", "--bits", "01"],
            ["dj", "--bits", "0111"],
            ["grover", "--n", "3", "--marked", "9"],
            ["qft-check", "--n", "0"],
            ["bogus"],
            ["group-order", "--table", str(z8), "--chain", "2"],
        ]
        for args in usage:
            code, out, err = run(binary, args)
            check(code == 1, f"expected exit 1 for {' '.join(args)}, got {code}")
            check(err.strip() != "", f"usage error must explain itself: {' '.join(args)}")
            check(out.strip() == "", f"usage error must not print a report: {' '.join(args)}")

    if failures:
        print(f"{len(failures)} CLI checks failed")
        return 1
    print("all CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
