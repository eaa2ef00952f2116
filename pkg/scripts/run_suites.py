#!/usr/bin/env python3
"""Run validation suites and write one JSON record per suite.

    python scripts/run_suites.py                 # every suite
    python scripts/run_suites.py dirac ore -o results/
"""

import argparse
import json
import sys
from pathlib import Path

from properconn.sweeps import SUITES


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("suites", nargs="*", metavar="SUITE", default=[])
    ap.add_argument("-o", "--outdir", type=Path, default=Path("results"))
    args = ap.parse_args()
    names = args.suites or list(SUITES)
    args.outdir.mkdir(parents=True, exist_ok=True)
    ok = True
    for name in names:
        res = SUITES[name]()
        ok &= res.passed
        rec = res.to_dict()
        rec["rows"] = [{"case": c, "ok": good, "detail": d} for c, good, d in res.rows]
        (args.outdir / f"{name}.json").write_text(json.dumps(rec, indent=1, sort_keys=True) + "\n")
        print(f"{'PASS' if res.passed else 'FAIL'}  {name:<16} {res.seconds:7.1f}s  {len(res.rows)} rows")
        for case, _, detail in res.failures():
            print(f"      {case}: {detail}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
