"""Best certified ratio of the bag adversary as the vertex budget grows."""

from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction

from lateops.adversaries import BagIS
from lateops.algorithms import make_algorithm
from lateops.harness import run_online
from lateops.problems import Problem


def measure(algorithm: str, c: Fraction, eps: Fraction, n1: int, budget: int) -> dict:
    adv = BagIS(c=c, eps=eps, n1=n1, budget=budget)
    run_online(Problem.IS, make_algorithm(algorithm), adv.next_event)
    s = adv.summary()
    return {
        "algorithm": algorithm,
        "budget": budget,
        "vertices": adv.next_id,
        "reached": s["reached"],
        "best_ratio": s["best_ratio"],
        "best_ratio_float": round(s["best_ratio_float"], 6),
        "bags": s["bags"],
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--algorithms", default="is.alg1,is.greedy:model=lar,is.swap:model=lar")
    ap.add_argument("--budgets", default="1000,10000,100000")
    ap.add_argument("--c", default="2", help="target ratio, below 3*sqrt(3)/2")
    ap.add_argument("--eps", default="1/20")
    ap.add_argument("--n1", type=int, default=200)
    args = ap.parse_args()
    rows = [
        measure(alg, Fraction(args.c), Fraction(args.eps), args.n1, int(b))
        for alg in args.algorithms.split(",")
        for b in args.budgets.split(",")
    ]
    w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)


if __name__ == "__main__":
    main()
