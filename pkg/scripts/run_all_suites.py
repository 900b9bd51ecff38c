#!/usr/bin/env python3
"""Run every verification suite at its default bounds and print a summary.

Usage:
    python scripts/run_all_suites.py [--out-dir reports/]

With --out-dir, each suite's canonical JSONL stream is written to
<out-dir>/<suite>.jsonl.  Exit status is nonzero when any check fails
(the dims suite's literal weight-3 formula is expected to fail on curves
with a non-Gorenstein branch; its value-route twin passes).
"""

import argparse
import sys
import time
from pathlib import Path

from maxnoether.reports import write_jsonl
from maxnoether.suites import SUITES, SuiteParams, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", help="write per-suite JSONL streams here")
    args = parser.parse_args()

    params = {
        "eq4-oracle": SuiteParams(max_genus=8),
        "local-lemma": SuiteParams(max_genus=10, max_n=4),
        "blowup": SuiteParams(max_genus=10),
        "noether-single": SuiteParams(max_genus=8, max_n=4),
        "noether-multi": SuiteParams(max_n=4),
        "resolution": SuiteParams(max_n=3),
        "hyperelliptic-negative": SuiteParams(),
        "dims": SuiteParams(max_n=3),
    }
    any_failed = False
    for name in sorted(SUITES):
        t0 = time.perf_counter()
        reports = run_suite(name, params[name])
        elapsed = time.perf_counter() - t0
        failed = [r for r in reports if not r.passed]
        any_failed |= bool(failed)
        print(
            f"{name:24} {len(reports) - len(failed):5}/{len(reports):<5} passed"
            f"  {elapsed:7.2f}s"
        )
        for r in failed[:3]:
            print(f"    FAIL {r.check}: predicted {r.predicted}, oracle {r.oracle}")
        if args.out_dir:
            out = Path(args.out_dir)
            out.mkdir(parents=True, exist_ok=True)
            with open(out / f"{name}.jsonl", "w", encoding="utf-8") as fp:
                write_jsonl(reports, fp)
    return 1 if any_failed else 0


if __name__ == "__main__":
    sys.exit(main())
