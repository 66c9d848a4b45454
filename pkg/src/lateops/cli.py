"""Command line entry point: ``lateops run|sweep|adversary|oracle|gen``.

Exit status: 0 on success, 2 when an ``--expect*``/``--assert-bound``
check fails, 1 on any other error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .algorithms import ALGORITHMS, make_algorithm
from .adversaries import ADVERSARIES
from .generators import make_sequence
from .harness import ExperimentConfig, run_experiment
from .invariants import STRICT_BOUNDS
from .ledger import DecisionModel, item_name
from .params import parse_spec
from .problems import Problem, solve
from .report import emit_report, summary_dict
from .stream import ArrivalKind, build_snapshot, parse_events, serialize_events
from .sweep import sweep_small_graphs


class CheckFailed(Exception):
    pass


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _resolve(args: argparse.Namespace) -> tuple[Problem, DecisionModel]:
    name, params = parse_spec(args.algorithm)
    if name not in ALGORITHMS:
        make_algorithm(args.algorithm)  # raises with the list of known names
    cls = ALGORITHMS[name]
    problem = Problem.parse(args.problem) if args.problem else cls.problem
    if args.model:
        model = DecisionModel.parse(args.model)
    elif "model" in params:
        model = DecisionModel.parse(params["model"])
    else:
        model = cls.models[0]
    return problem, model


def _check_ratio(ratio: Optional[Fraction], args: argparse.Namespace) -> None:
    shown = "inf" if ratio is None else str(ratio)
    if args.expect is not None:
        want = None if args.expect == "inf" else Fraction(args.expect)
        if ratio != want:
            raise CheckFailed(f"ratio {shown}, expected {args.expect}")
    if args.expect_above is not None and ratio is not None and not ratio > Fraction(args.expect_above):
        raise CheckFailed(f"ratio {shown} is not above {args.expect_above}")


def cmd_run(args: argparse.Namespace) -> int:
    problem, model = _resolve(args)
    source = args.source
    if args.command == "adversary" and not source.startswith("adv."):
        raise ValueError("adversary runs need an adv.* source")
    cfg = ExperimentConfig(
        problem=problem, model=model, algorithm=args.algorithm, source=source,
        seed=args.seed, cap=args.cap, max_events=args.budget,
    )
    report = run_experiment(cfg)
    _write(emit_report(report, args.format), args.out)
    _check_ratio(report.ratio, args)
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    problem, model = _resolve(args)
    summary = sweep_small_graphs(
        problem, model, args.algorithm, n_max=args.n_max, orders_per_graph=args.orders,
        seed=args.seed, samples=args.samples, keep_records=args.format == "csv" or args.records, cap=args.cap,
    )
    if args.format == "json":
        _write(json.dumps(summary_dict(summary), indent=2) + "\n", args.out)
    else:
        _write(emit_report(summary, "csv"), args.out)
    name = parse_spec(args.algorithm)[0]
    if args.assert_bound:
        if name not in STRICT_BOUNDS:
            raise ValueError(f"no proven bound registered for {name}")
        if summary.bound_violations:
            worst = summary.bound_violations[0]
            raise CheckFailed(
                f"{len(summary.bound_violations)} instances exceed {STRICT_BOUNDS[name][0]}, e.g. [{worst.events}]"
            )
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    problem = Problem.parse(args.problem)
    seq = parse_events(Path(args.input).read_text())
    if seq.kind is not problem.arrival:
        raise ValueError(f"{args.input} holds {seq.kind.value} arrivals; {problem.value} needs {problem.arrival.value}")
    g = build_snapshot(seq)
    res = solve(problem, g, args.cap)
    out = {
        "problem": problem.value,
        "n": g.n,
        "m": g.m,
        "value": _num(res.value),
        "witness": [item_name(x, problem.item_kind) for x in sorted(res.witness)],
        "nodes_explored": res.nodes_explored,
    }
    _write(json.dumps(out, indent=2) + "\n", args.out)
    return 0


def _num(x) -> int | str:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cmd_gen(args: argparse.Namespace) -> int:
    kind = ArrivalKind(args.kind) if args.kind else (Problem.parse(args.problem).arrival if args.problem else ArrivalKind.VERTEX)
    seq = make_sequence(args.spec, kind, args.seed)
    _write(serialize_events(seq), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lateops", description="Online graph problems with late accepts and rejects.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--problem", help="is, match, vc or msf (default: the algorithm's problem)")
        sp.add_argument("--model", help="std, la, lr or lar (default: the algorithm's native model)")
        sp.add_argument("--algorithm", required=True, help=f"one of {', '.join(sorted(ALGORITHMS))}, with :key=value params")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--cap", type=int, help="oracle size cap (LATEOPS_CAP also works)")
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--out", help="write here instead of stdout")

    for name, helptext in (("run", "run one experiment"), ("adversary", "run an algorithm against an adversary")):
        sp = sub.add_parser(name, help=helptext)
        common(sp)
        sp.add_argument(
            "--source", required=True,
            help=f"adversary ({', '.join(sorted(ADVERSARIES))}), generator (gen.gnp, ...) or file:<path>",
        )
        sp.add_argument("--budget", type=int, help="stop after this many events")
        sp.add_argument("--expect", help="exit 2 unless the ratio equals this exact value ('inf' allowed)")
        sp.add_argument("--expect-above", help="exit 2 unless the ratio is strictly above this value")
        sp.set_defaults(func=cmd_run)

    sp = sub.add_parser("sweep", help="worst ratio over small graphs against the exact oracle")
    common(sp)
    sp.add_argument("--n-max", type=int, default=5)
    sp.add_argument("--orders", type=int, help="random orders per labeled graph (default: every sequence)")
    sp.add_argument("--samples", type=int, default=10_000, help="random instances per size above 5")
    sp.add_argument("--records", action="store_true", help="include per-instance records in JSON output")
    sp.add_argument("--assert-bound", action="store_true", help="exit 2 if any instance breaks the proven bound")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("oracle", help="exact optimum of an event file")
    sp.add_argument("--problem", required=True)
    sp.add_argument("--input", required=True)
    sp.add_argument("--cap", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("gen", help="write a generated sequence as an event file")
    sp.add_argument("spec", help="e.g. gen.gnp:n=10,p=0.3,order=shuffle or gen.path:n=6")
    sp.add_argument("--problem", help="pick the arrival kind from a problem")
    sp.add_argument("--kind", choices=("vertex", "edge"))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - report and exit 1
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
