"""Adversary for online minimum spanning forest (edge arrivals)."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from ..ledger import DecisionModel, SolutionLedger
from ..problems import Problem
from ..stream import EdgeArrival, GraphSnapshot, edge
from .base import Adversary


class HubMSF(Adversary):
    """A weight-W path on vertices 0..n-2, then a hub n-1 joined to every
    path vertex by a weight-1 edge.  The hub star (weight n-1) is optimal;
    an algorithm that cannot evict path edges keeps weight (n-2)W + 1.
    The input does not depend on the algorithm."""

    name = "adv.msf.hub"
    problem = Problem.MSF
    models = tuple(DecisionModel)

    def __init__(self, n: int, W: int | Fraction = 1000) -> None:
        W = Fraction(W)
        if n < 3 or W < 1 or W.denominator != 1:
            raise ValueError("need n >= 3 and an integer W >= 1")
        super().__init__()
        self.n = n
        self.W = W
        self.events: list[EdgeArrival] = [edge(i, i + 1, W) for i in range(n - 2)]
        self.events += [edge(i, n - 1, 1) for i in range(n - 1)]
        self.pos = 0

    def next_event(self, ledger: SolutionLedger, g: GraphSnapshot) -> Optional[EdgeArrival]:
        if self.pos >= len(self.events):
            return None
        self.pos += 1
        return self.events[self.pos - 1]

    def witness(self, g: GraphSnapshot) -> frozenset:
        hub = self.n - 1
        return frozenset((i, hub) for i in range(hub) if g.has_edge(i, hub))

    def opt_bound(self, g: GraphSnapshot) -> Fraction:
        return sum((g.weights[k] for k in self.witness(g)), Fraction(0))
