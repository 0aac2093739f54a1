"""Run the structural check suites and print one line per claim.

    python3 scripts/run_checks.py                 # everything
    python3 scripts/run_checks.py systems kernels # selected suites
"""

import argparse
import sys
import time

from implicit3.verify import SUITES, run_paper_suite


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("suites", nargs="*", metavar="SUITE", help=", ".join(SUITES))
    args = parser.parse_args(argv)
    unknown = [s for s in args.suites if s not in SUITES]
    if unknown:
        parser.error(f"unknown suite(s): {', '.join(unknown)}")
    refuted = 0
    for name in args.suites or list(SUITES):
        start = time.perf_counter()
        reports = run_paper_suite(name)
        print(f"# {name} ({time.perf_counter() - start:.1f}s)")
        for r in reports:
            print(r.line())
            if r.status == "Refuted":
                refuted += 1
                print(f"    counterexample: {r.evidence['counterexample']}")
    print(f"{refuted} refuted")
    return 1 if refuted else 0


if __name__ == "__main__":
    sys.exit(main())
