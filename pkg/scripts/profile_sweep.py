"""Time the oracle phases per grid point.

Shows where the verification budget goes (build, BFS sweep, matching,
domination, girth, connectivity) as n grows.

Usage: python3 scripts/profile_sweep.py --n-max 8
"""

import argparse

from hbnk.core import GroundParams
from hbnk.report import compute_invariants

PHASES = ("build", "bfs_sweep", "matching", "domination", "girth", "connectivity")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=3)
    parser.add_argument("--n-max", type=int, default=8)
    args = parser.parse_args()

    header = f"{'n':>2} {'k':>2} {'status':>6} " + " ".join(
        f"{p:>12}" for p in PHASES
    )
    print(header)
    total = 0.0
    for n in range(args.n_min, args.n_max + 1):
        for k in range(2, n):
            report = compute_invariants(GroundParams(n, k))
            cells = " ".join(
                f"{report.timings.get(p, 0.0):>12.3f}" for p in PHASES
            )
            print(f"{n:>2} {k:>2} {report.overall:>6} {cells}")
            total += sum(report.timings.values())
    print(f"total oracle time: {total:.2f}s")


if __name__ == "__main__":
    main()
