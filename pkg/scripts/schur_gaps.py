#!/usr/bin/env python3
"""Contrast the Schur spectrum (A = B) with the two-set spectrum.

The two-set count r(A, B, B) attains every value in [f, g]; the Schur count
r(A, A, A) provably does not always fill [f_s, g_s]. This sweep enumerates
the Schur spectrum for every s at each odd prime up to the bound and prints
the interior values that no size-s set attains.
"""

import argparse
import sys

from addtriples.residues import primes_up_to
from addtriples.spectrum import schur_spectrum


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-p", type=int, default=13,
                        help="largest prime to sweep (cost is C(p, s) per instance)")
    parser.add_argument("--budget", type=int, default=2 * 10**6)
    args = parser.parse_args()

    total_gaps = 0
    for p in primes_up_to(args.max_p):
        if p == 2:
            continue
        rows = []
        for s in range(1, p):
            report = schur_spectrum(p, s, budget=args.budget)
            if report.gaps:
                rows.append((s, report.f, report.g, list(report.gaps)))
                total_gaps += len(report.gaps)
        print(f"p={p}:")
        if not rows:
            print("  no gaps at any s")
        for s, f, g, gaps in rows:
            print(f"  s={s:3d}  [f_s, g_s]=[{f}, {g}]  unattained: {gaps}")
    print(f"\ntotal unattained interior values: {total_gaps}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
