"""Run every zoo suite, write SuiteReport JSON and re-verify the archived certificates."""
from __future__ import annotations

import argparse
import json
from pathlib import Path

from orbitlab.verify import verify_json
from orbitlab.zoo import SUITES, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="results", help="directory for <suite>.json reports")
    ap.add_argument("--suite", action="append", choices=SUITES, help="run only these suites")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name in args.suite or SUITES:
        rep = run_suite(name)
        bad = sum(1 for c in rep.certificates if verify_json(c))
        (out / f"{name}.json").write_text(json.dumps(rep.to_json(), indent=1) + "\n")
        status = "pass" if rep.passed and not bad else "FAIL"
        print(f"{name:10s} {status}  checks {sum(r.passed for r in rep.results)}/{len(rep.results)}  "
              f"certificates {len(rep.certificates) - bad}/{len(rep.certificates)}  {rep.timing:.2f}s")
        failed += status != "pass"
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
