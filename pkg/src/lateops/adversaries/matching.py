"""Adversaries for online matching (edge arrivals).

Each construction is a sequence of small gadgets around a base edge uv.
New vertex ids are drawn when an edge is queued, and queued edges are
emitted in order, so every edge introduces at most the next fresh id.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from ..ledger import DecisionModel, SolutionLedger
from ..problems import Problem
from ..stream import EdgeArrival, GraphSnapshot, edge
from .base import Adversary

STD, LA, LR, LAR = (
    DecisionModel.STANDARD,
    DecisionModel.LATE_ACCEPT,
    DecisionModel.LATE_REJECT,
    DecisionModel.LATE_ACCEPT_REJECT,
)

Key = tuple[int, int]


def _key(a: int, b: int) -> Key:
    return (a, b) if a < b else (b, a)


@dataclass
class Gadget:
    u: int
    v: int
    stage: int = 0
    x: Optional[int] = None
    y: Optional[int] = None
    x2: Optional[int] = None
    y2: Optional[int] = None
    closing: str = ""  # late-reject gadget: "xy" or "zu"
    z: Optional[int] = None

    @property
    def base(self) -> Key:
        return _key(self.u, self.v)


class _GadgetAdversary(Adversary):
    problem = Problem.MATCHING

    def __init__(self, m: int) -> None:
        if m < 1:
            raise ValueError("m must be at least 1")
        super().__init__()
        self.m = m
        self.gadgets: list[Gadget] = []
        self.queue: deque[EdgeArrival] = deque()

    def _new_base(self) -> EdgeArrival:
        u = self.fresh()
        v = self.fresh()
        self.gadgets.append(Gadget(u, v))
        return edge(u, v)

    def _react(self, ledger: SolutionLedger) -> None:
        raise NotImplementedError

    def next_event(self, ledger: SolutionLedger, g: GraphSnapshot) -> Optional[EdgeArrival]:
        self._react(ledger)
        if self.queue:
            return self.queue.popleft()
        if len(self.gadgets) < self.m:
            return self._new_base()
        return None

    def summary(self) -> dict:
        stages: dict[str, int] = {}
        for gd in self.gadgets:
            stages[str(gd.stage)] = stages.get(str(gd.stage), 0) + 1
        return {"gadgets": len(self.gadgets), "stages": stages}


class ExtendMatching(_GadgetAdversary):
    """m disjoint edges; every base edge the algorithm ever accepts gets
    pendant edges xu and vy, which OPT takes instead."""

    name = "adv.match.ext"
    models = (STD, LA)

    def _react(self, ledger: SolutionLedger) -> None:
        for gd in self.gadgets:
            if gd.stage == 0 and gd.base in ledger.ever_accepted:
                gd.stage = 1
                gd.x = self.fresh()
                self.queue.append(edge(gd.x, gd.u))
                gd.y = self.fresh()
                self.queue.append(edge(gd.v, gd.y))

    def witness(self, g: GraphSnapshot) -> frozenset:
        out: set[Key] = set()
        for gd in self.gadgets:
            if gd.stage == 1:
                out |= {_key(gd.x, gd.u), _key(gd.v, gd.y)}
            else:
                out.add(gd.base)
        return frozenset(out)


class LateRejectMatching(_GadgetAdversary):
    """One gadget at a time: uv; if accepted, vx; then xy if uv was
    late-rejected (OPT: uv, xy), otherwise zu (OPT: zu, vx)."""

    name = "adv.match.lr"
    models = (LR, STD)

    def _react(self, ledger: SolutionLedger) -> None:
        if not self.gadgets or self.queue:
            return
        gd = self.gadgets[-1]
        if gd.stage == 0:
            gd.stage = 1
            if gd.base in ledger.accepted:
                gd.x = self.fresh()
                self.queue.append(edge(gd.v, gd.x))
            else:
                gd.stage = 3
        elif gd.stage == 1:
            gd.stage = 2
            if gd.base in ledger.rejected:
                gd.closing = "xy"
                gd.y = self.fresh()
                self.queue.append(edge(gd.x, gd.y))
            else:
                gd.closing = "zu"
                gd.z = self.fresh()
                self.queue.append(edge(gd.z, gd.u))

    def witness(self, g: GraphSnapshot) -> frozenset:
        out: set[Key] = set()
        for gd in self.gadgets:
            if gd.closing == "xy":
                out |= {gd.base, _key(gd.x, gd.y)}
            elif gd.closing == "zu":
                out |= {_key(gd.z, gd.u), _key(gd.v, gd.x)}
            else:
                out.add(gd.base)
        return frozenset(out)


class LateAcceptRejectMatching(_GadgetAdversary):
    """Gadgets run in parallel: uv; once uv is accepted, xu and vy; once uv
    is late-rejected, x'x and yy'.  OPT then takes x'x, uv, yy'."""

    name = "adv.match.lar"
    models = (LAR, LA)

    def _react(self, ledger: SolutionLedger) -> None:
        for gd in self.gadgets:
            if gd.stage == 0 and gd.base in ledger.ever_accepted:
                gd.stage = 1
                gd.x = self.fresh()
                self.queue.append(edge(gd.x, gd.u))
                gd.y = self.fresh()
                self.queue.append(edge(gd.v, gd.y))
            if gd.stage == 1 and gd.base in ledger.rejected:
                gd.stage = 2
                gd.x2 = self.fresh()
                self.queue.append(edge(gd.x2, gd.x))
                gd.y2 = self.fresh()
                self.queue.append(edge(gd.y, gd.y2))

    def witness(self, g: GraphSnapshot) -> frozenset:
        out: set[Key] = set()
        for gd in self.gadgets:
            if gd.stage == 2:
                out |= {_key(gd.x2, gd.x), gd.base, _key(gd.y, gd.y2)}
            elif gd.stage == 1:
                out |= {_key(gd.x, gd.u), _key(gd.v, gd.y)}
            else:
                out.add(gd.base)
        return frozenset(out)
