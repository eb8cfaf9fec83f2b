#!/usr/bin/env python3
"""Run the full check registry over one or more profiles and print timings.

Usage:
    python scripts/run_verification.py                 # standard profile
    python scripts/run_verification.py --profile deep
    python scripts/run_verification.py --profile all --json out.json
"""

import argparse
import json
import sys
import time

from qrafts.identities import PROFILES, REGISTRY, run_check


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--profile", default="standard",
                        choices=[*sorted(PROFILES), "all"])
    parser.add_argument("--json", metavar="PATH",
                        help="also dump all reports as JSON")
    args = parser.parse_args()

    profiles = sorted(PROFILES, key=PROFILES.get) \
        if args.profile == "all" else [args.profile]
    width = max(len(n) for n in REGISTRY)
    dump = []
    failures = 0
    for prof in profiles:
        order = PROFILES[prof]
        print(f"== profile {prof} (order {order}) ==")
        t0 = time.perf_counter()
        for check in REGISTRY.values():
            rep = run_check(check, order)
            dump.append(rep.to_json_dict())
            mark = "ok  " if rep.passed else "FAIL"
            print(f"  {mark} {rep.name:<{width}}  {rep.millis:6d} ms")
            if not rep.passed:
                failures += 1
                fd = rep.first_diff
                where = f"q^{fd.q}" if fd.x is None else f"x^{fd.x} q^{fd.q}"
                print(f"       first diff at {where}: lhs={fd.lhs} rhs={fd.rhs}")
        print(f"  total {time.perf_counter() - t0:.1f} s")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(dump, fh, indent=2)
        print(f"wrote {len(dump)} reports to {args.json}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
