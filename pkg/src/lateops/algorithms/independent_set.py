"""Online independent set: greedy, single swap, threshold, and the
admissible-set swapping algorithm for the late accept/reject model."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from ..ledger import DecisionModel, Move, SolutionLedger
from ..oracles import _bits, lexmin_max_independent_mask, mask_of, max_independent_mask, opt_independent_set
from ..problems import Problem
from ..stream import GraphSnapshot, VertexArrival
from .base import OnlineAlgorithm

STD, LA, LR, LAR = (
    DecisionModel.STANDARD,
    DecisionModel.LATE_ACCEPT,
    DecisionModel.LATE_REJECT,
    DecisionModel.LATE_ACCEPT_REJECT,
)


def meets_sqrt3(size: int, conflict: int) -> bool:
    """size >= sqrt(3) * conflict, exactly."""
    return size * size >= 3 * conflict * conflict


class GreedyIS(OnlineAlgorithm):
    """Accept each vertex that has no accepted neighbor."""

    name = "is.greedy"
    problem = Problem.IS
    models = (STD, LA, LR, LAR)

    def step(self, event: VertexArrival, g: GraphSnapshot, ledger: SolutionLedger) -> list[Move]:
        v = event.vertex
        if any(w in ledger.accepted for w in event.neighbors):
            return self.decline(ledger, v)
        return [self.take(ledger, v)]


class SwapIS(OnlineAlgorithm):
    """Accept if possible; if exactly one accepted neighbor u, trade u for v."""

    name = "is.swap"
    problem = Problem.IS
    models = (LR, LAR)

    def step(self, event: VertexArrival, g: GraphSnapshot, ledger: SolutionLedger) -> list[Move]:
        v = event.vertex
        held = [w for w in event.neighbors if w in ledger.accepted]
        if not held:
            return [self.take(ledger, v)]
        if len(held) == 1:
            return [self.drop(ledger, held[0]), self.take(ledger, v)]
        return self.decline(ledger, v)


class ThresholdIS(OnlineAlgorithm):
    """Wait until the revealed graph has an independent set of size c,
    accept a maximum one, then continue greedily."""

    name = "is.threshold"
    problem = Problem.IS
    models = (LA, LAR)

    def __init__(self, c: int = 2, model: Optional[DecisionModel] = None, cap: Optional[int] = None) -> None:
        if c < 1:
            raise ValueError("threshold c must be a positive integer")
        self.c = c
        self.cap = cap
        super().__init__(model)

    def reset(self) -> None:
        self.triggered_at: Optional[int] = None

    def step(self, event: VertexArrival, g: GraphSnapshot, ledger: SolutionLedger) -> list[Move]:
        v = event.vertex
        if self.triggered_at is not None:
            if any(w in ledger.accepted for w in event.neighbors):
                return []
            return [self.take(ledger, v)]
        best = opt_independent_set(g, self.cap)
        if best.value < self.c:
            return []
        self.triggered_at = ledger.step
        return [self.take(ledger, x) for x in sorted(best.witness)]


# -- admissible sets ------------------------------------------------------------


class AdmissibleSearchTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class AdmissibleSet:
    T: frozenset
    Q: frozenset  # N(T) ∩ S

    @property
    def conflict(self) -> int:
        return len(self.Q)

    def sort_key(self) -> tuple:
        return (len(self.Q), -len(self.T), tuple(sorted(self.T)))


def _conflict_mask(g: GraphSnapshot, t_mask: int, s_mask: int) -> int:
    out = 0
    for t in _bits(t_mask):
        out |= g.masks[t]
    return out & s_mask


def find_admissible_min_conflict(
    g: GraphSnapshot,
    S: Iterable[int],
    P: Iterable[int],
    *,
    signature_cap: int = 16,
) -> Optional[AdmissibleSet]:
    """Admissible set of minimum conflict |N(T) ∩ S|; ties go to larger T,
    then to the lexicographically smallest sorted T.

    Pending vertices are grouped by their neighborhood inside S.  For every
    union Q of such neighborhoods, the pending vertices whose neighborhood
    lies inside Q form the candidate pool, and a maximum independent set of
    the pool is the best T with conflict at most |Q|.  Scanning unions by
    increasing |Q| finds the minimum conflict exactly; the cost grows with
    the number of distinct neighborhoods, not with |P|.
    """
    s_mask = mask_of(S)
    groups: dict[int, int] = {}
    for p in P:
        sig = g.masks[p] & s_mask
        groups[sig] = groups.get(sig, 0) | (1 << p)
    if not groups:
        return None
    if len(groups) > signature_cap:
        raise AdmissibleSearchTooLarge(
            f"{len(groups)} distinct S-neighborhoods among pending vertices (cap {signature_cap})"
        )
    sigs = list(groups)
    unions = {0}
    for s in sigs:
        unions |= {u | s for u in unions}
    by_size: dict[int, list[int]] = {}
    for q in unions:
        by_size.setdefault(q.bit_count(), []).append(q)
    for q_size in sorted(by_size):
        hits: list[tuple[int, int]] = []  # (pool, size)
        for q in by_size[q_size]:
            pool = 0
            for s in sigs:
                if not s & ~q:
                    pool |= groups[s]
            size, _ = max_independent_mask(g.masks, pool)
            if size >= 1 and meets_sqrt3(size, q_size):
                hits.append((pool, size))
        if not hits:
            continue
        top = max(size for _, size in hits)
        choices = []
        for pool, size in hits:
            if size == top:
                t_mask = lexmin_max_independent_mask(g.masks, pool)
                choices.append(tuple(_bits(t_mask)))
        best = min(choices)
        t_mask = mask_of(best)
        q_mask = _conflict_mask(g, t_mask, s_mask)
        assert q_mask.bit_count() == q_size, "minimum-conflict pool produced a smaller conflict"
        return AdmissibleSet(frozenset(best), frozenset(_bits(q_mask)))
    return None


def enumerate_admissible(
    g: GraphSnapshot,
    S: Iterable[int],
    P: Iterable[int],
    *,
    cap: int = 24,
) -> Optional[AdmissibleSet]:
    """Same contract as `find_admissible_min_conflict`, by exhaustive search
    over independent subsets of P (with a prune when no superset can become
    admissible)."""
    pend = sorted(P)
    if len(pend) > cap:
        raise AdmissibleSearchTooLarge(f"|P|={len(pend)} exceeds enumeration cap {cap}")
    s_mask = mask_of(S)
    best: Optional[tuple] = None

    def rec(i: int, t: list[int], t_mask: int, nbr: int) -> None:
        nonlocal best
        conflict = (nbr & s_mask).bit_count()
        if t and meets_sqrt3(len(t), conflict):
            key = (conflict, -len(t), tuple(t))
            if best is None or key < best:
                best = key
        room = len(t) + (len(pend) - i)
        if not meets_sqrt3(room, conflict):
            return
        for j in range(i, len(pend)):
            x = pend[j]
            if t_mask & g.masks[x]:
                continue
            t.append(x)
            rec(j + 1, t, t_mask | (1 << x), nbr | g.masks[x])
            t.pop()

    rec(0, [], 0, 0)
    if best is None:
        return None
    T = frozenset(best[2])
    return AdmissibleSet(T, frozenset(_bits(_conflict_mask(g, mask_of(T), s_mask))))


@dataclass
class Alg1State:
    A: set[int] = field(default_factory=set)
    B: set[int] = field(default_factory=set)
    R: set[int] = field(default_factory=set)
    swaps: list[AdmissibleSet] = field(default_factory=list)

    @property
    def S(self) -> set[int]:
        return self.A | self.B


class AdmissibleSwapIS(OnlineAlgorithm):
    """Accept when independent; otherwise keep replacing N(T) ∩ S by T for
    minimum-conflict admissible sets T until none is left."""

    name = "is.alg1"
    problem = Problem.IS
    models = (LAR,)

    def __init__(self, model: Optional[DecisionModel] = None, signature_cap: int = 16) -> None:
        self.signature_cap = signature_cap
        super().__init__(model)

    def reset(self) -> None:
        self.state = Alg1State()
        self.s_mask = 0

    def step(self, event: VertexArrival, g: GraphSnapshot, ledger: SolutionLedger) -> list[Move]:
        v = event.vertex
        st = self.state
        if not g.masks[v] & self.s_mask:
            st.A.add(v)
            self.s_mask |= 1 << v
            return [self.take(ledger, v)]
        moves: list[Move] = []
        S = set(st.S)
        P = set(ledger.pending)
        while True:
            adm = find_admissible_min_conflict(g, S, P, signature_cap=self.signature_cap)
            if adm is None:
                break
            for q in sorted(adm.Q):
                moves.append(self.drop(ledger, q))
                S.discard(q)
                st.A.discard(q)
                st.B.discard(q)
                st.R.add(q)
                self.s_mask &= ~(1 << q)
            for t in sorted(adm.T):
                moves.append(self.take(ledger, t))
                P.discard(t)
                S.add(t)
                st.B.add(t)
                self.s_mask |= 1 << t
            st.swaps.append(adm)
        return moves
