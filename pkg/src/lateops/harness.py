"""Experiment runner: algorithm x sequence source x ledger x oracle."""

from __future__ import annotations

import copy
import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Optional, Union

from . import oracles
from .adversaries import Adversary, make_adversary
from .algorithms import OnlineAlgorithm, current_item, make_algorithm
from .generators import make_sequence
from .ledger import DecisionModel, SolutionLedger, item_name
from .problems import Problem, competitive_ratio, is_feasible, solution_value, solve
from .stream import (
    ArrivalEvent,
    EventStream,
    GraphSnapshot,
    RequestSequence,
    event_violations,
    format_event,
    parse_events,
)

Number = Union[int, Fraction]
Observer = Callable[[int, ArrivalEvent, GraphSnapshot, SolutionLedger, OnlineAlgorithm], None]
EventSource = Callable[[SolutionLedger, GraphSnapshot], Optional[ArrivalEvent]]


class InvalidSequence(ValueError):
    pass


class InfeasibleOutput(RuntimeError):
    pass


@dataclass
class ExperimentConfig:
    problem: Problem
    model: DecisionModel
    algorithm: str
    source: str  # "adv.<name>[:params]", "gen.<name>[:params]" or "file:<path>"
    seed: int = 0
    cap: Optional[int] = None
    max_events: Optional[int] = None
    implicit_reject: bool = False

    def validate(self) -> None:
        alg = make_algorithm(self.algorithm, self.model)
        if alg.problem is not self.problem:
            raise ValueError(f"{alg.name} solves {alg.problem.value}, not {self.problem.value}")
        if alg.model is not self.model:
            raise ValueError(f"algorithm model {alg.model.value} does not match config model {self.model.value}")
        if self.source.startswith("adv."):
            adv = make_adversary(self.source)
            if adv.problem is not self.problem:
                raise ValueError(f"{adv.name} targets {adv.problem.value}, not {self.problem.value}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")

    def echo(self) -> dict:
        d = asdict(self)
        d["problem"] = self.problem.value
        d["model"] = self.model.value
        return d


@dataclass
class RunResult:
    sequence: RequestSequence
    graph: GraphSnapshot
    ledger: SolutionLedger
    solution: frozenset


class OnlineSession:
    """One algorithm run driven event by event; `clone` forks the run so
    sweeps can share prefixes."""

    def __init__(self, problem: Problem, alg: OnlineAlgorithm, *, implicit_reject: bool = False) -> None:
        self.problem = problem
        self.alg = alg
        self.ledger = SolutionLedger(alg.model, problem.item_kind, implicit_reject=implicit_reject)
        self.stream = EventStream(problem.arrival)
        self.step = 0

    @property
    def graph(self) -> GraphSnapshot:
        return self.stream.graph

    def feed(self, ev: ArrivalEvent) -> None:
        g = self.stream.graph
        bad = event_violations(ev, self.problem.arrival, g.n, g.weights)
        if bad:
            raise InvalidSequence(f"event {self.step} ({format_event(ev)}): {bad[0]}")
        self.stream.push(ev)
        self.ledger.reveal(self.step, [current_item(ev)])
        self.ledger.apply_all(self.alg.step(ev, g, self.ledger))
        self.ledger.close_step()
        self.step += 1

    def clone(self) -> OnlineSession:
        new = OnlineSession.__new__(OnlineSession)
        new.problem = self.problem
        new.alg = copy.deepcopy(self.alg)
        new.ledger = self.ledger.copy()
        new.stream = EventStream(self.stream.kind, list(self.stream.events), self.stream.graph.copy())
        new.step = self.step
        return new


def run_online(
    problem: Problem,
    alg: OnlineAlgorithm,
    source: Union[EventSource, Iterable[ArrivalEvent]],
    *,
    observer: Optional[Observer] = None,
    implicit_reject: bool = False,
    max_events: Optional[int] = None,
) -> RunResult:
    """Feed events to `alg` one step at a time through a ledger.

    `source` is either an iterable of events or a callable that receives
    the ledger and snapshot after each step (an adversary).  Every event is
    checked against the arrival rules before it is revealed.
    """
    if callable(source):
        next_event = source
    else:
        it = iter(source)
        next_event = lambda ledger, g: next(it, None)  # noqa: E731
    run = OnlineSession(problem, alg, implicit_reject=implicit_reject)
    while max_events is None or run.step < max_events:
        ev = next_event(run.ledger, run.graph)
        if ev is None:
            break
        run.feed(ev)
        if observer is not None:
            observer(run.step - 1, ev, run.graph, run.ledger, alg)
    solution = run.ledger.finalize()
    return RunResult(run.stream.freeze(), run.graph, run.ledger, solution)


@dataclass
class ExperimentReport:
    config: dict
    n: int
    m: int
    alg_value: Number
    opt_value: Number
    opt_source: str  # "oracle" or "adversary"
    adversary_bound: Optional[Number]
    ratio: Optional[Fraction]  # None when unbounded
    unbounded: bool
    solution: list
    unused: list
    adversary: dict = field(default_factory=dict)
    events: list[str] = field(default_factory=list)
    moves: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "n": self.n,
            "m": self.m,
            "alg_value": _num(self.alg_value),
            "opt_value": _num(self.opt_value),
            "opt_source": self.opt_source,
            "adversary_bound": None if self.adversary_bound is None else _num(self.adversary_bound),
            "ratio": "inf" if self.ratio is None else _num(self.ratio),
            "ratio_float": float("inf") if self.ratio is None else float(self.ratio),
            "unbounded": self.unbounded,
            "solution": self.solution,
            "unused": self.unused,
            "adversary": self.adversary,
            "transcript": {"events": self.events, "moves": self.moves},
            "wall_time": self.wall_time,
        }


def _num(x: Number) -> Union[int, str]:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _oracle_fits(problem: Problem, g: GraphSnapshot, cap: Optional[int]) -> bool:
    if problem is Problem.MSF:
        return True
    if problem is Problem.MATCHING:
        return g.m <= (cap if cap is not None else oracles.cap_from_env(oracles.DEFAULT_EDGE_CAP))
    return g.n <= (cap if cap is not None else oracles.cap_from_env(oracles.DEFAULT_VERTEX_CAP))


def load_source(cfg: ExperimentConfig) -> Union[Adversary, RequestSequence]:
    src = cfg.source
    if src.startswith("adv."):
        return make_adversary(src)
    if src.startswith("gen."):
        return make_sequence(src, cfg.problem.arrival, cfg.seed)
    path = src[5:] if src.startswith("file:") else src
    seq = parse_events(Path(path).read_text())
    if seq.kind is not cfg.problem.arrival:
        raise ValueError(f"{path} holds {seq.kind.value} arrivals; {cfg.problem.value} needs {cfg.problem.arrival.value}")
    return seq


def run_experiment(cfg: ExperimentConfig, observer: Optional[Observer] = None) -> ExperimentReport:
    cfg.validate()
    t0 = time.perf_counter()
    alg = make_algorithm(cfg.algorithm, cfg.model)
    source = load_source(cfg)
    adv = source if isinstance(source, Adversary) else None
    feed = adv.next_event if adv is not None else source.events  # type: ignore[union-attr]
    res = run_online(
        cfg.problem, alg, feed, observer=observer,
        implicit_reject=cfg.implicit_reject, max_events=cfg.max_events,
    )
    g, sol = res.graph, res.solution
    if not is_feasible(cfg.problem, g, sol):
        raise InfeasibleOutput(f"{alg.label} ended with an infeasible {cfg.problem.value} solution")
    alg_value = solution_value(cfg.problem, g, sol)
    bound: Optional[Number] = None
    if adv is not None:
        wit = adv.witness(g)
        if not is_feasible(cfg.problem, g, wit):
            raise AssertionError(f"{adv.name} produced an infeasible witness")
        bound = adv.opt_bound(g)
    if _oracle_fits(cfg.problem, g, cfg.cap):
        opt_value: Number = solve(cfg.problem, g, cfg.cap).value
        opt_source = "oracle"
    elif bound is not None:
        opt_value, opt_source = bound, "adversary"
    else:
        raise oracles.OracleCapExceeded(f"instance too large for the exact oracle (n={g.n}, m={g.m})")
    ratio = competitive_ratio(cfg.problem, alg_value, opt_value)
    kind = cfg.problem.item_kind
    return ExperimentReport(
        config=cfg.echo(),
        n=g.n,
        m=g.m,
        alg_value=alg_value,
        opt_value=opt_value,
        opt_source=opt_source,
        adversary_bound=bound,
        ratio=ratio,
        unbounded=ratio is None,
        solution=[item_name(x, kind) for x in sorted(sol)],
        unused=[item_name(x, kind) for x in sorted(res.ledger.unused)],
        adversary=adv.summary() if adv is not None else {},
        events=[format_event(ev) for ev in res.sequence.events],
        moves=[json.loads(mv.to_json(kind)) for mv in res.ledger.log],
        wall_time=time.perf_counter() - t0,
    )
