"""Measured competitive ratios for every algorithm against its adversary,
plus small-graph sweeps for the algorithms with proven upper bounds.

    python3 scripts/table1.py            # lower bounds only (seconds)
    python3 scripts/table1.py --sweeps   # also n <= 5 sweeps (about a minute)
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from lateops.adversaries import make_adversary
from lateops.harness import ExperimentConfig, run_experiment
from lateops.invariants import STRICT_BOUNDS
from lateops.ledger import DecisionModel
from lateops.problems import Problem
from lateops.sweep import sweep_small_graphs


@dataclass
class Row:
    problem: str
    model: str
    algorithm: str
    source: str


ROWS = [
    Row("is", "std", "is.greedy", "adv.is.std:n=20"),
    Row("is", "lr", "is.swap", "adv.is.lr:n=20"),
    Row("is", "la", "is.threshold:c=2", "adv.is.la:n=20"),
    Row("is", "lar", "is.alg1", "adv.is.bags:c=2,n1=200,budget=10000"),
    Row("is", "lar", "is.greedy", "adv.is.bags:c=2,n1=200,budget=10000"),
    Row("match", "std", "match.greedy", "adv.match.ext:m=10"),
    Row("match", "lr", "match.greedy", "adv.match.lr:m=10"),
    Row("match", "lar", "match.alg2", "adv.match.lar:m=10"),
    Row("vc", "std", "vc.standard", "adv.vc.std:n=20"),
    Row("vc", "lr", "vc.reset:b=3", "adv.vc.lr:n=40"),
    Row("vc", "la", "vc.matching", "adv.vc.pairs:g=10"),
    Row("msf", "std", "msf.standard", "adv.msf.hub:n=12,W=1000"),
    Row("msf", "lr", "msf.redrule", "adv.msf.hub:n=12,W=1000"),
]


def lower_bounds() -> None:
    print(f"{'problem':7} {'model':5} {'algorithm':18} {'source':38} {'ALG':>6} {'OPT':>6} {'ratio':>12}")
    for row in ROWS:
        cfg = ExperimentConfig(
            make_adversary(row.source).problem, DecisionModel.parse(row.model), row.algorithm, row.source
        )
        rep = run_experiment(cfg)
        ratio = "inf" if rep.ratio is None else f"{float(rep.ratio):.4f}"
        print(f"{row.problem:7} {row.model:5} {row.algorithm:18} {row.source:38} "
              f"{str(rep.alg_value):>6} {str(rep.opt_value):>6} {ratio:>12}")


def sweeps(n_max: int) -> None:
    print()
    print(f"worst ratio over every arrival sequence with n <= {n_max}")
    for algorithm, problem, model in (
        ("is.alg1", "is", "lar"), ("match.alg2", "match", "lar"), ("vc.matching", "vc", "la"),
    ):
        s = sweep_small_graphs(Problem.parse(problem), DecisionModel.parse(model), algorithm,
                               n_max=n_max, keep_records=False)
        print(f"  {algorithm:12} {s.instances:>7} instances  max ratio {s.max_ratio_text:>5}"
              f"  proven {STRICT_BOUNDS[algorithm][0]}  violations {len(s.bound_violations)}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sweeps", action="store_true")
    ap.add_argument("--n-max", type=int, default=5)
    args = ap.parse_args()
    lower_bounds()
    if args.sweeps:
        sweeps(args.n_max)


if __name__ == "__main__":
    main()
