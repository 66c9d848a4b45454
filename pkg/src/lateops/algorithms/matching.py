"""Online matching in the edge arrival model."""

from __future__ import annotations

from typing import Iterable, Optional

from ..ledger import DecisionModel, Move, SolutionLedger
from ..problems import Problem
from ..stream import EdgeArrival, GraphSnapshot
from .base import OnlineAlgorithm

Key = tuple[int, int]


def _key(a: int, b: int) -> Key:
    return (a, b) if a < b else (b, a)


class MatchingState:
    def __init__(self) -> None:
        self.M: set[Key] = set()
        self.mate: dict[int, int] = {}

    def add(self, k: Key) -> None:
        u, v = k
        assert u not in self.mate and v not in self.mate, f"{k} touches a matched vertex"
        self.M.add(k)
        self.mate[u] = v
        self.mate[v] = u

    def remove(self, k: Key) -> None:
        u, v = k
        self.M.remove(k)
        del self.mate[u]
        del self.mate[v]

    def free(self, x: int) -> bool:
        return x not in self.mate


def find_length3_augmenting_path(
    g: GraphSnapshot, M: Iterable[Key]
) -> Optional[tuple[int, int, int, int]]:
    """Path x-u-v-y with uv in M, x and y distinct and unmatched.

    Returns the lexicographically smallest (u, v, x, y), reported as the
    tuple (x, u, v, y).
    """
    matched: set[int] = set()
    edges = list(M)
    for a, b in edges:
        matched.update((a, b))
    best: Optional[tuple[int, int, int, int]] = None
    for a, b in edges:
        for u, v in ((a, b), (b, a)):
            if best is not None and (u, v) > best[:2]:
                continue
            xs = sorted(x for x in g.adj[u] if x not in matched)
            ys = sorted(y for y in g.adj[v] if y not in matched)
            for x in xs:
                y = next((y for y in ys if y != x), None)
                if y is not None:
                    cand = (u, v, x, y)
                    if best is None or cand < best:
                        best = cand
                    break
    if best is None:
        return None
    u, v, x, y = best
    return (x, u, v, y)


class GreedyMatching(OnlineAlgorithm):
    name = "match.greedy"
    problem = Problem.MATCHING
    models = (DecisionModel.STANDARD, DecisionModel.LATE_ACCEPT, DecisionModel.LATE_REJECT,
              DecisionModel.LATE_ACCEPT_REJECT)

    def reset(self) -> None:
        self.state = MatchingState()

    def step(self, event: EdgeArrival, g: GraphSnapshot, ledger: SolutionLedger) -> list[Move]:
        k = event.edge.key
        if self.state.free(k[0]) and self.state.free(k[1]):
            self.state.add(k)
            return [self.take(ledger, k)]
        return self.decline(ledger, k)


class ShortAugmentingMatching(OnlineAlgorithm):
    """Greedy plus augmentation along length-3 augmenting paths."""

    name = "match.alg2"
    problem = Problem.MATCHING
    models = (DecisionModel.LATE_ACCEPT_REJECT,)

    def reset(self) -> None:
        self.state = MatchingState()
        self.augmentations = 0

    def step(self, event: EdgeArrival, g: GraphSnapshot, ledger: SolutionLedger) -> list[Move]:
        st = self.state
        k = event.edge.key
        if st.free(k[0]) and st.free(k[1]):
            st.add(k)
            return [self.take(ledger, k)]
        moves: list[Move] = []
        # one pass suffices when no short augmenting path existed before this edge
        while (path := find_length3_augmenting_path(g, st.M)) is not None:
            x, u, v, y = path
            uv, ux, vy = _key(u, v), _key(u, x), _key(v, y)
            st.remove(uv)
            st.add(ux)
            st.add(vy)
            moves += [self.take(ledger, ux), self.take(ledger, vy), self.drop(ledger, uv)]
            self.augmentations += 1
        return moves
