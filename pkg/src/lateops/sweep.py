"""Small-graph sweeps: run an algorithm on many instances and record the
worst ratio against the exact oracle.

An online algorithm sees vertices only by arrival index, so a (labeled
graph, arrival order) pair is fully described by the sequence it relabels
to.  The exhaustive mode therefore walks the tree of all such sequences,
forking the run at every node, and evaluates every node: each prefix is an
instance in its own right.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .algorithms import make_algorithm
from .generators import gnp_edges, to_sequence
from .harness import InfeasibleOutput, OnlineSession
from .invariants import STRICT_BOUNDS, strict_bound_holds
from .ledger import DecisionModel
from .oracles import _bits
from .problems import Problem, competitive_ratio, is_feasible, solution_value, solve
from .stream import ArrivalEvent, ArrivalKind, GraphSnapshot, RequestSequence, VertexArrival, edge, format_event

Check = Callable[[OnlineSession], list[str]]


@dataclass
class SweepRecord:
    index: int
    origin: str  # "exhaustive", "orders" or "sample"
    n: int
    m: int
    alg_value: int | Fraction
    opt_value: int | Fraction
    ratio: Optional[Fraction]  # None when unbounded
    events: str

    def ratio_text(self) -> str:
        return "inf" if self.ratio is None else str(self.ratio)


@dataclass
class SweepSummary:
    problem: Problem
    model: DecisionModel
    algorithm: str
    records: list[SweepRecord] = field(default_factory=list)
    keep_records: bool = True
    instances: int = 0
    max_ratio: Optional[Fraction] = Fraction(0)  # None once an unbounded instance is seen
    argmax: Optional[SweepRecord] = None
    histogram: Counter = field(default_factory=Counter)
    violations: list[str] = field(default_factory=list)
    bound_violations: list[SweepRecord] = field(default_factory=list)

    def add(self, rec: SweepRecord) -> None:
        self.instances += 1
        if self.keep_records:
            self.records.append(rec)
        self.histogram[rec.ratio_text()] += 1
        if self.max_ratio is not None and (rec.ratio is None or rec.ratio > self.max_ratio):
            self.max_ratio = rec.ratio
            self.argmax = rec
        if self.algorithm in STRICT_BOUNDS and not strict_bound_holds(self.algorithm, rec.alg_value, rec.opt_value):
            self.bound_violations.append(rec)

    @property
    def max_ratio_text(self) -> str:
        return "inf" if self.max_ratio is None else str(self.max_ratio)


class _Evaluator:
    def __init__(self, summary: SweepSummary, check: Optional[Check], cap: Optional[int]) -> None:
        self.summary = summary
        self.check = check
        self.cap = cap
        self.opt_cache: dict = {}

    def opt(self, problem: Problem, g: GraphSnapshot) -> int | Fraction:
        key = (g.n, frozenset(g.weights.items()))
        if key not in self.opt_cache:
            self.opt_cache[key] = solve(problem, g, self.cap).value
        return self.opt_cache[key]

    def __call__(self, run: OnlineSession, origin: str) -> None:
        problem, g = run.problem, run.graph
        sol = frozenset(run.ledger.accepted)
        if not is_feasible(problem, g, sol):
            raise InfeasibleOutput(f"{run.alg.label} infeasible on {_compact(run.stream.events)}")
        alg_value = solution_value(problem, g, sol)
        opt_value = self.opt(problem, g)
        idx = self.summary.instances
        self.summary.add(SweepRecord(
            idx, origin, g.n, g.m, alg_value, opt_value,
            competitive_ratio(problem, alg_value, opt_value), _compact(run.stream.events),
        ))
        if self.check is not None:
            self.summary.violations.extend(f"#{idx} [{_compact(run.stream.events)}]: {msg}" for msg in self.check(run))


def _compact(events: list[ArrivalEvent] | tuple[ArrivalEvent, ...]) -> str:
    return "; ".join(format_event(ev) for ev in events)


# -- instance sources ---------------------------------------------------------------

def _children(g: GraphSnapshot, kind: ArrivalKind, n_max: int) -> Iterator[ArrivalEvent]:
    """Every event that can extend a sequence with graph g, staying within n_max vertices."""
    n = g.n
    if kind is ArrivalKind.VERTEX:
        if n < n_max:
            for mask in range(1 << n):
                yield VertexArrival(n, tuple(_bits(mask)))
        return
    for v in range(min(n + 2, n_max)):
        for u in range(v):
            if (u, v) in g.weights:
                continue
            if v == n + 1 and u != n:  # two fresh ids must be n, n+1
                continue
            yield edge(u, v)


def labeled_graphs(n: int) -> Iterator[list[tuple[int, int]]]:
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield [pairs[i] for i in _bits(mask)]


def _fresh_session(problem: Problem, model: DecisionModel, algorithm: str) -> OnlineSession:
    return OnlineSession(problem, make_algorithm(algorithm, model))


def _run_sequence(problem: Problem, model: DecisionModel, algorithm: str, seq: RequestSequence) -> OnlineSession:
    run = _fresh_session(problem, model, algorithm)
    for ev in seq.events:
        run.feed(ev)
    return run


# -- sweeps -------------------------------------------------------------------------

def sweep_small_graphs(
    problem: Problem,
    model: DecisionModel,
    algorithm: str,
    n_max: int = 5,
    orders_per_graph: Optional[int] = None,
    seed: int = 0,
    *,
    samples: int = 10_000,
    exhaustive_max: int = 5,
    check: Optional[Check] = None,
    check_samples: bool = True,
    keep_records: bool = True,
    cap: Optional[int] = None,
) -> SweepSummary:
    """Worst ratio over small instances.

    Sizes up to `exhaustive_max` are covered exhaustively: every arrival
    sequence when `orders_per_graph` is None, otherwise every labeled graph
    with that many seeded random orders.  Larger sizes up to `n_max` get
    `samples` distinct seeded (G(n, 1/2), random order) instances each;
    repeated draws are skipped.  `check` runs on every evaluated instance
    (on samples only if `check_samples`).
    """
    if n_max > 7:
        raise ValueError("n_max is limited to 7")
    summary = SweepSummary(problem, model, algorithm, keep_records=keep_records)
    evaluate = _Evaluator(summary, check, cap)
    kind = problem.arrival
    rng = random.Random(seed)
    top = min(n_max, exhaustive_max)

    if orders_per_graph is None:
        stack = [_fresh_session(problem, model, algorithm)]
        while stack:
            run = stack.pop()
            children = list(_children(run.graph, kind, top))
            for ev in reversed(children):
                child = run.clone()
                child.feed(ev)
                evaluate(child, "exhaustive")
                stack.append(child)
    else:
        seen: set = set()
        for n in range(1, top + 1):
            for edges in labeled_graphs(n):
                for _ in range(orders_per_graph):
                    seq = to_sequence(n, edges, kind, rng)
                    if seq.events in seen or not seq.events:
                        continue
                    seen.add(seq.events)
                    evaluate(_run_sequence(problem, model, algorithm, seq), "orders")

    seen_samples: set = set()
    sample_eval = evaluate if check_samples else _Evaluator(summary, None, cap)
    sample_eval.opt_cache = evaluate.opt_cache
    for n in range(top + 1, n_max + 1):
        taken = 0
        for _ in range(20 * samples):
            if taken == samples:
                break
            seq = to_sequence(n, gnp_edges(n, 0.5, rng), kind, rng)
            if seq.events in seen_samples:
                continue
            seen_samples.add(seq.events)
            sample_eval(_run_sequence(problem, model, algorithm, seq), "sample")
            taken += 1
    return summary


def sweep_random(
    problem: Problem,
    model: DecisionModel,
    algorithm: str,
    count: int,
    n_max: int,
    seed: int = 0,
    *,
    n_min: int = 2,
    weights: Optional[tuple[int, int]] = None,
    check: Optional[Check] = None,
    keep_records: bool = True,
    cap: Optional[int] = None,
) -> SweepSummary:
    """`count` seeded random instances: n uniform in [n_min, n_max], edge
    probability uniform in (0, 1), random arrival order, and for edge
    arrivals integer weights uniform in `weights` (default unit)."""
    summary = SweepSummary(problem, model, algorithm, keep_records=keep_records)
    evaluate = _Evaluator(summary, check, cap)
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        p = rng.random()
        edges = gnp_edges(n, p, rng)
        if weights is not None:
            lo, hi = weights
            edges = [(u, v, Fraction(rng.randint(lo, hi))) for u, v, _ in edges]
        seq = to_sequence(n, edges, problem.arrival, rng)
        evaluate(_run_sequence(problem, model, algorithm, seq), "sample")
    return summary


def sequence_count(problem: Problem, n_max: int) -> int:
    """Number of arrival sequences with at most n_max vertices (root excluded)."""
    kind = problem.arrival
    total = 0
    stack = [GraphSnapshot()]
    while stack:
        g = stack.pop()
        for ev in _children(g, kind, n_max):
            h = g.copy()
            h.add(ev)
            total += 1
            stack.append(h)
    return total


__all__ = ["SweepRecord", "SweepSummary", "labeled_graphs", "sequence_count", "sweep_random", "sweep_small_graphs"]
