#!/usr/bin/env python3
"""Compare the closed-form Picard rank with the cusp-form pipeline.

Prints one row per genus: the exact rank-formula breakdown next to
1 + dim S_{21/2, Lambda_g}, and exits nonzero on any disagreement.

Usage: python3 scripts/rank_vs_cusp.py [G_MAX]
"""

import sys

from nlrank import lambda_lattice, picard_rank, picard_rank_via_cusp


def main():
    g_max = int(sys.argv[1]) if len(sys.argv) > 1 else 30
    print(f"{'g':>4} {'alpha':>5} {'beta':>5} {'fracsum':>10} {'sq':>3} "
          f"{'rank':>5} {'1+dimS':>7}")
    failures = 0
    for g in range(2, g_max + 1):
        rep = picard_rank(g)
        via_cusp = picard_rank_via_cusp(lambda_lattice(g))
        mark = "" if rep.rank == via_cusp else "  <-- MISMATCH"
        failures += rep.rank != via_cusp
        fs = f"{rep.fracsum.numerator}/{rep.fracsum.denominator}"
        print(f"{g:>4} {rep.alpha:>5} {rep.beta:>5} {fs:>10} {rep.sqcount:>3} "
              f"{rep.rank:>5} {via_cusp:>7}{mark}")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
