"""Online vertex cover in the vertex arrival model."""

from __future__ import annotations

from typing import Optional

from ..ledger import DecisionModel, Move, SolutionLedger
from ..oracles import opt_vertex_cover
from ..problems import Problem
from ..stream import GraphSnapshot, VertexArrival
from .base import OnlineAlgorithm


class StandardVC(OnlineAlgorithm):
    """Accept a new vertex only if one of its edges is still uncovered."""

    name = "vc.standard"
    problem = Problem.VC
    models = (DecisionModel.STANDARD, DecisionModel.LATE_REJECT)

    def step(self, event: VertexArrival, g: GraphSnapshot, ledger: SolutionLedger) -> list[Move]:
        v = event.vertex
        if any(w not in ledger.accepted for w in event.neighbors):
            return [self.take(ledger, v)]
        return self.decline(ledger, v)


class MaximalMatchingVC(OnlineAlgorithm):
    """Late-accept both endpoints of the first uncovered edge a vertex
    closes, i.e. the vertex set of a greedy maximal matching."""

    name = "vc.matching"
    problem = Problem.VC
    models = (DecisionModel.LATE_ACCEPT, DecisionModel.LATE_ACCEPT_REJECT)

    def step(self, event: VertexArrival, g: GraphSnapshot, ledger: SolutionLedger) -> list[Move]:
        v = event.vertex
        open_ends = sorted(w for w in event.neighbors if w not in ledger.accepted)
        if not open_ends:
            return []
        return [self.take(ledger, v), self.take(ledger, open_ends[0])]


class ResetVC(OnlineAlgorithm):
    """Accept the first b+1 vertices, shrink them to an optimal cover of
    what has been seen, then accept only when an edge would stay uncovered."""

    name = "vc.reset"
    problem = Problem.VC
    models = (DecisionModel.LATE_REJECT,)

    def __init__(self, b: int = 0, model: Optional[DecisionModel] = None, cap: Optional[int] = None) -> None:
        if b < 0:
            raise ValueError("b must be non-negative")
        self.b = b
        self.cap = cap
        super().__init__(model)

    def reset(self) -> None:
        self.cover: Optional[frozenset] = None

    def step(self, event: VertexArrival, g: GraphSnapshot, ledger: SolutionLedger) -> list[Move]:
        v = event.vertex
        if ledger.step < self.b:
            return [self.take(ledger, v)]
        if ledger.step == self.b:
            # the (b+1)-th vertex: accept, then cut down to an optimal cover
            self.cover = opt_vertex_cover(g, self.cap).witness
            moves = [self.take(ledger, v)]
            moves += [self.drop(ledger, x) for x in sorted(ledger.accepted | {v}) if x not in self.cover]
            return moves
        if any(w not in ledger.accepted for w in event.neighbors):
            return [self.take(ledger, v)]
        return self.decline(ledger, v)
