"""Zero-slack ratio checks on small graphs: every arrival sequence up to
--exhaustive vertices plus seeded samples up to --n-max."""

from __future__ import annotations

import argparse
import time

from lateops.invariants import STRICT_BOUNDS
from lateops.ledger import DecisionModel
from lateops.problems import Problem
from lateops.sweep import sweep_small_graphs

TARGETS = {
    "is.alg1": (Problem.IS, DecisionModel.LATE_ACCEPT_REJECT),
    "match.alg2": (Problem.MATCHING, DecisionModel.LATE_ACCEPT_REJECT),
    "vc.matching": (Problem.VC, DecisionModel.LATE_ACCEPT),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--algorithms", default=",".join(TARGETS))
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--exhaustive", type=int, default=5)
    ap.add_argument("--samples", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    failed = False
    for name in args.algorithms.split(","):
        problem, model = TARGETS[name]
        t0 = time.perf_counter()
        s = sweep_small_graphs(problem, model, name, n_max=args.n_max, exhaustive_max=args.exhaustive,
                               samples=args.samples, seed=args.seed, keep_records=False)
        secs = time.perf_counter() - t0
        print(f"{name:12} {s.instances:>7} instances  max {s.max_ratio_text:>5} (bound {STRICT_BOUNDS[name][0]})"
              f"  violations {len(s.bound_violations)}  {secs:.1f}s")
        if s.argmax is not None:
            print(f"{'':12} worst: {s.argmax.events}")
        failed |= bool(s.bound_violations)
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
