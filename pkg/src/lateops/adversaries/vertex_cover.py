"""Adversaries for online vertex cover (vertex arrivals)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from ..ledger import DecisionModel, SolutionLedger
from ..oracles import forest_independent_set
from ..problems import Problem
from ..stream import GraphSnapshot, VertexArrival
from .base import Adversary

STD, LA, LR, LAR = (
    DecisionModel.STANDARD,
    DecisionModel.LATE_ACCEPT,
    DecisionModel.LATE_REJECT,
    DecisionModel.LATE_ACCEPT_REJECT,
)


class PendantVC(Adversary):
    """Isolated vertices until the algorithm rejects some vertex v (the
    smallest, if several); afterwards every vertex is a pendant on v, so
    OPT = {v} while the algorithm must take each pendant."""

    name = "adv.vc.std"
    problem = Problem.VC
    models = (STD,)

    def __init__(self, n: int) -> None:
        if n < 2:
            raise ValueError("n must be at least 2")
        super().__init__()
        self.n = n
        self.anchor: Optional[int] = None

    def next_event(self, ledger: SolutionLedger, g: GraphSnapshot) -> Optional[VertexArrival]:
        if self.anchor is None and ledger.rejected:
            self.anchor = min(ledger.rejected)
        if self.next_id >= self.n:
            return None
        v = self.fresh()
        return VertexArrival(v, () if self.anchor is None else (self.anchor,))

    def witness(self, g: GraphSnapshot) -> frozenset:
        if self.anchor is not None and g.adj[self.anchor]:
            return frozenset({self.anchor})
        return frozenset()


class LateRejectPendantVC(PendantVC):
    name = "adv.vc.lr"
    models = (LR,)


@dataclass
class Pair:
    u: int
    v: int
    closed: bool = False
    third: Optional[int] = None


class PairsVC(Adversary):
    """g gadgets, each an edge uv presented as u then v.  If the algorithm
    covers uv with one endpoint, a third vertex hangs off the other one.
    In the late accept/reject model every late-rejected vertex also gets a
    flood of pendants: the algorithm must take all of them, OPT takes the
    rejected vertex.  `flood=0` sizes a flood as 2*|S|+1 at trigger time.

    If a pair is left uncovered after its second vertex, the input ends
    there and the algorithm's output is infeasible.
    """

    name = "adv.vc.pairs"
    problem = Problem.VC
    models = (LA, LAR)

    def __init__(self, g: int, flood: int = 0) -> None:
        if g < 1 or flood < 0:
            raise ValueError("g must be positive and flood non-negative")
        super().__init__()
        self.g = g
        self.flood = flood
        self.pairs: list[Pair] = []
        self.queue: deque[VertexArrival] = deque()
        self.flooded: dict[int, int] = {}
        self.stuck = False

    def _emit(self, nbrs: tuple[int, ...]) -> int:
        x = self.fresh()
        self.queue.append(VertexArrival(x, nbrs))
        return x

    def next_event(self, ledger: SolutionLedger, g: GraphSnapshot) -> Optional[VertexArrival]:
        S = ledger.accepted
        for p in self.pairs:
            if p.closed or p.v >= g.n:
                continue
            p.closed = True
            if p.u in S and p.v in S:
                continue
            if p.u not in S and p.v not in S:
                self.stuck = True
                return None
            open_end = p.v if p.u in S else p.u
            p.third = self._emit((open_end,))
        for r in sorted(ledger.rejected - self.flooded.keys()):
            size = self.flood or 2 * len(S) + 1
            self.flooded[r] = size
            for _ in range(size):
                self._emit((r,))
        if self.queue:
            return self.queue.popleft()
        if len(self.pairs) < self.g:
            u = self.fresh()
            v = self.fresh()
            self.pairs.append(Pair(u, v))
            self.queue.append(VertexArrival(v, (u,)))
            return VertexArrival(u, ())
        return None

    def witness(self, g: GraphSnapshot) -> frozenset:
        # every vertex has at most one earlier neighbour, so g is a forest
        return frozenset(range(g.n)) - forest_independent_set(g)

    def summary(self) -> dict:
        return {
            "gadgets": len(self.pairs),
            "thirds": sum(p.third is not None for p in self.pairs),
            "floods": {str(k): v for k, v in sorted(self.flooded.items())},
            "stopped_uncovered": self.stuck,
        }
