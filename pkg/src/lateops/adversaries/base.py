from __future__ import annotations

from fractions import Fraction
from typing import ClassVar, Optional

from ..ledger import DecisionModel, SolutionLedger
from ..problems import Problem
from ..stream import ArrivalEvent, GraphSnapshot


class Adversary:
    """Adaptive request generator.

    `next_event` is called before every step with the ledger after the
    previous step and the graph the adversary has emitted so far; it
    returns the next event, or None to end the input.  Adversaries read
    only the ledger, never the algorithm's internals.

    `opt_bound` is the value of an explicit feasible solution on the
    emitted graph (`witness`).  For maximization it is a lower bound on
    OPT, for minimization an upper bound; either way the ratio computed
    from it is a certified lower bound on the algorithm's ratio.
    """

    name: ClassVar[str] = ""
    problem: ClassVar[Problem]
    models: ClassVar[tuple[DecisionModel, ...]] = ()

    def __init__(self) -> None:
        self.next_id = 0

    def fresh(self) -> int:
        v = self.next_id
        self.next_id += 1
        return v

    def next_event(self, ledger: SolutionLedger, g: GraphSnapshot) -> Optional[ArrivalEvent]:
        raise NotImplementedError

    def witness(self, g: GraphSnapshot) -> frozenset:
        raise NotImplementedError

    def opt_bound(self, g: GraphSnapshot) -> int | Fraction:
        return len(self.witness(g))

    def summary(self) -> dict:
        """Extra construction-specific numbers for the report."""
        return {}

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"
