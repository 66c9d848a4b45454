"""The four graph problems: arrival model, item kind, objective, feasibility."""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Optional

from . import oracles
from .ledger import ItemKind
from .stream import ArrivalKind, GraphSnapshot


class Problem(enum.Enum):
    IS = "is"
    MATCHING = "match"
    VC = "vc"
    MSF = "msf"

    @property
    def arrival(self) -> ArrivalKind:
        return ArrivalKind.VERTEX if self in (Problem.IS, Problem.VC) else ArrivalKind.EDGE

    @property
    def item_kind(self) -> ItemKind:
        return ItemKind.VERTEX if self.arrival is ArrivalKind.VERTEX else ItemKind.EDGE

    @property
    def maximize(self) -> bool:
        return self in (Problem.IS, Problem.MATCHING)

    @classmethod
    def parse(cls, text: str) -> Problem:
        key = text.strip().lower()
        aliases = {
            "is": cls.IS, "independent_set": cls.IS,
            "match": cls.MATCHING, "matching": cls.MATCHING,
            "vc": cls.VC, "vertex_cover": cls.VC,
            "msf": cls.MSF, "mst": cls.MSF, "spanning_forest": cls.MSF,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown problem {text!r}") from None


def solution_value(problem: Problem, g: GraphSnapshot, solution: Iterable) -> int | Fraction:
    if problem is Problem.MSF:
        return oracles.forest_weight(g, solution)
    return len(list(solution))


def is_feasible(problem: Problem, g: GraphSnapshot, solution: Iterable) -> bool:
    sol = list(solution)
    if problem is Problem.IS:
        return oracles.is_independent(g, sol)
    if problem is Problem.VC:
        return oracles.is_vertex_cover(g, sol)
    if problem is Problem.MATCHING:
        return all(k in g.weights for k in sol) and oracles.is_matching(sol)
    return oracles.is_spanning_forest(g, sol)


def solve(problem: Problem, g: GraphSnapshot, cap: Optional[int] = None) -> oracles.OracleResult:
    if problem is Problem.IS:
        return oracles.opt_independent_set(g, cap)
    if problem is Problem.VC:
        return oracles.opt_vertex_cover(g, cap)
    if problem is Problem.MATCHING:
        return oracles.opt_matching(g, cap)
    return oracles.opt_spanning_forest(g)


def competitive_ratio(problem: Problem, alg: int | Fraction, opt: int | Fraction) -> Optional[Fraction]:
    """OPT/ALG for maximization, ALG/OPT for minimization; None if unbounded."""
    num, den = (opt, alg) if problem.maximize else (alg, opt)
    if den == 0:
        return Fraction(1) if num == 0 else None
    return Fraction(num) / Fraction(den)
