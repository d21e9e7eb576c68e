"""Print closed-form invariants of H_B(n, k) over a parameter range.

Pure formula evaluation, so large n is fine.  Handy for eyeballing how
the invariants scale before deciding what to materialize.

Usage: python3 scripts/survey.py --n-min 3 --n-max 10
"""

import argparse

from hbnk import formulas


def row(n: int, k: int) -> str:
    order = formulas.order_formula(n)
    size = formulas.size_formula(n, k)
    alpha = formulas.independence_number(n, k)
    beta = formulas.matching_number(n, k)
    rank = formulas.circuit_rank(n, k)
    if n > 2 and k > 1:
        d = formulas.distance_distribution_formula(n, k).counts
        dist = f"{d[1]}/{d[2]}/{d[3]}/{d[4]}"
        median = "+".join(formulas.median_classes(n, k))
    else:
        dist = "-"
        median = "-"
    return (
        f"{n:>2} {k:>2} {order:>10} {size:>12} {alpha:>10} {beta:>6} "
        f"{rank:>12} {dist:>34} {median}"
    )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=3)
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument(
        "--include-k1", action="store_true", help="also list the k=1 rows"
    )
    args = parser.parse_args()

    print(
        f"{'n':>2} {'k':>2} {'order':>10} {'size':>12} {'alpha':>10} "
        f"{'beta':>6} {'rank':>12} {'d1/d2/d3/d4':>34} median"
    )
    for n in range(args.n_min, args.n_max + 1):
        k_lo = 1 if args.include_k1 else 2
        for k in range(k_lo, n):
            print(row(n, k))


if __name__ == "__main__":
    main()
