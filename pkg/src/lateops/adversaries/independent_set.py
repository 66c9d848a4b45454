"""Adversaries for online independent set."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..ledger import Action, DecisionModel, SolutionLedger
from ..oracles import _bits, forest_independent_set
from ..problems import Problem
from ..stream import GraphSnapshot, VertexArrival
from .base import Adversary

STD, LA, LR, LAR = (
    DecisionModel.STANDARD,
    DecisionModel.LATE_ACCEPT,
    DecisionModel.LATE_REJECT,
    DecisionModel.LATE_ACCEPT_REJECT,
)


class PendantIS(Adversary):
    """Isolated vertices until the algorithm accepts one, v; afterwards
    every vertex is a pendant on v."""

    name = "adv.is.std"
    problem = Problem.IS
    models = (STD, LA)

    def __init__(self, n: int) -> None:
        if n < 2:
            raise ValueError("n must be at least 2")
        super().__init__()
        self.n = n
        self.anchor: Optional[int] = None

    def next_event(self, ledger: SolutionLedger, g: GraphSnapshot) -> Optional[VertexArrival]:
        if self.anchor is None and ledger.ever_accepted:
            self.anchor = min(ledger.ever_accepted)
        if self.next_id >= self.n:
            return None
        v = self.fresh()
        return VertexArrival(v, () if self.anchor is None else (self.anchor,))

    def witness(self, g: GraphSnapshot) -> frozenset:
        every = frozenset(range(g.n))
        if self.anchor is not None and g.adj[self.anchor]:
            return every - {self.anchor}
        return every


class LateAcceptPendantIS(PendantIS):
    name = "adv.is.la"
    models = (LA, LAR)


class PathIS(Adversary):
    """Each new vertex hangs off the smallest currently held vertex; the
    emitted graph is a forest (a path against the single-swap algorithm)."""

    name = "adv.is.lr"
    problem = Problem.IS
    models = (LR, STD)

    def __init__(self, n: int) -> None:
        if n < 2:
            raise ValueError("n must be at least 2")
        super().__init__()
        self.n = n

    def next_event(self, ledger: SolutionLedger, g: GraphSnapshot) -> Optional[VertexArrival]:
        if self.next_id >= self.n:
            return None
        v = self.fresh()
        if ledger.accepted:
            return VertexArrival(v, (min(ledger.accepted),))
        return VertexArrival(v, ())

    def witness(self, g: GraphSnapshot) -> frozenset:
        return forest_independent_set(g)


@dataclass
class Bag:
    index: int
    parent: Optional[int]
    mask: int = 0
    size: int = 0
    first_reject_holdings: Optional[int] = None  # held mask inside the bag before its first late reject

    @property
    def a(self) -> int:
        h = self.first_reject_holdings
        return 0 if h is None else h.bit_count()


@dataclass
class BagState:
    bags: list[Bag] = field(default_factory=list)
    bag_of: list[int] = field(default_factory=list)
    newest: int = 0
    alg_bag: Optional[int] = None
    held: int = 0
    rejected: int = 0
    everything: int = 0

    def path(self, b: int) -> list[int]:
        out = []
        cur: Optional[int] = b
        while cur is not None:
            out.append(cur)
            cur = self.bags[cur].parent
        return out[::-1]


class BagIS(Adversary):
    """Bag construction for the late accept/reject model.

    Vertices are poured into the newest bag; each new vertex is adjacent to
    every earlier vertex outside its bag that has not been rejected, so the
    algorithm's holdings always sit inside one bag.  When the algorithm
    moves to a different bag, a new bag is opened as that bag's child.  The
    first bag grows to `n1` vertices before the second one opens.

    Along a root-to-bag path B_1..B_j, let a_i be the number of vertices of
    B_i the algorithm held just before its first late reject there.  Two
    independent sets are tracked: the algorithm's own holdings plus a_i for
    every second ancestor of its bag, and the whole newest bag plus a_i for
    every second ancestor of the newest bag.  The run stops once the larger
    of the two exceeds `c` times the holdings, or after `budget` vertices.
    """

    name = "adv.is.bags"
    problem = Problem.IS
    models = (LAR,)

    def __init__(
        self,
        c: Fraction | float | str = Fraction(2),
        eps: Fraction | float | str = Fraction(1, 20),
        n1: int = 200,
        budget: int = 10_000,
    ) -> None:
        super().__init__()
        self.c = Fraction(str(c)) if isinstance(c, float) else Fraction(c)
        self.eps = Fraction(str(eps)) if isinstance(eps, float) else Fraction(eps)
        if not (1 <= self.c and 4 * self.c * self.c < 27):
            raise ValueError("target ratio c must satisfy 1 <= c < 3*sqrt(3)/2")
        if self.eps <= 0 or n1 < 1 or budget < 1:
            raise ValueError("eps, n1 and budget must be positive")
        self.n1 = n1
        self.budget = budget
        self.st = BagState(bags=[Bag(0, None)])
        self._log_pos = 0
        self._need_child = False
        self.reached = False
        self.best_ratio = Fraction(0)
        self.best_at = 0
        self.history: list[tuple[int, int, int]] = []  # (vertices, bound, holdings) at each bag switch

    # -- observing the ledger ----------------------------------------------------

    def _sync(self, ledger: SolutionLedger) -> None:
        st = self.st
        log = ledger.log
        for mv in log[self._log_pos:]:
            x = mv.item
            if mv.action in (Action.ACCEPT, Action.LATE_ACCEPT):
                st.held |= 1 << x
            elif mv.action in (Action.LATE_REJECT, Action.REJECT):
                if mv.action is Action.LATE_REJECT:
                    bag = st.bags[st.bag_of[x]]
                    if bag.first_reject_holdings is None:
                        bag.first_reject_holdings = st.held & bag.mask
                    st.held &= ~(1 << x)
                st.rejected |= 1 << x
        self._log_pos = len(log)
        if st.held:
            owners = {st.bag_of[x] for x in _bits(st.held)}
            if len(owners) != 1:
                raise AssertionError(f"holdings span bags {sorted(owners)}")
            (owner,) = owners
            if owner != st.alg_bag:
                st.alg_bag = owner
                self._need_child = True

    def _open_child(self) -> None:
        st = self.st
        root_growing = st.alg_bag == 0 and st.newest == 0 and st.bags[0].size < self.n1
        if not self._need_child or root_growing:
            return
        st.bags.append(Bag(len(st.bags), st.alg_bag))
        st.newest = len(st.bags) - 1
        self._need_child = False

    # -- certified counts ----------------------------------------------------------

    def _alternating(self, b: int) -> int:
        """Sum of a_i over the ancestors of b at even distance >= 2."""
        path = self.st.path(b)
        return sum(self.st.bags[i].a for i in path[-3::-2])

    def counts(self) -> tuple[int, int, int]:
        """(holdings family, newest-bag family, holdings)."""
        st = self.st
        h = st.held.bit_count()
        own = h + self._alternating(st.alg_bag) if st.alg_bag is not None else 0
        newest = st.bags[st.newest].size + self._alternating(st.newest)
        return own, newest, h

    def ratio(self) -> Fraction:
        own, newest, h = self.counts()
        return Fraction(max(own, newest), max(h, 1))

    # -- emitting ------------------------------------------------------------------

    def next_event(self, ledger: SolutionLedger, g: GraphSnapshot) -> Optional[VertexArrival]:
        st = self.st
        self._sync(ledger)
        before = st.newest
        self._open_child()
        if st.newest != before:
            own, newest, h = self.counts()
            self.history.append((self.next_id, max(own, newest), h))
        if st.bags[0].size >= self.n1:
            own, newest, h = self.counts()
            r = Fraction(max(own, newest), max(h, 1))
            if r > self.best_ratio:
                self.best_ratio, self.best_at = r, self.next_id
            if max(own, newest) > self.c * h:
                self.reached = True
                return None
        if self.next_id >= self.budget:
            return None
        v = self.fresh()
        bag = st.bags[st.newest]
        nbrs = st.everything & ~bag.mask & ~st.rejected
        bag.mask |= 1 << v
        bag.size += 1
        st.bag_of.append(bag.index)
        st.everything |= 1 << v
        return VertexArrival(v, tuple(_bits(nbrs)))

    # -- witness -------------------------------------------------------------------

    def _family(self, g: GraphSnapshot, top_mask: int, b: Optional[int]) -> frozenset:
        st = self.st
        parts = [top_mask]
        if b is not None:
            path = st.path(b)
            parts += [st.bags[i].first_reject_holdings or 0 for i in path[-3::-2]]
        chosen = 0
        for part in parts:
            for x in _bits(part):
                if not g.masks[x] & chosen:
                    chosen |= 1 << x
        return frozenset(_bits(chosen))

    def witness(self, g: GraphSnapshot) -> frozenset:
        st = self.st
        own = self._family(g, st.held, st.alg_bag) if st.alg_bag is not None else frozenset()
        newest = self._family(g, st.bags[st.newest].mask, st.newest)
        return max(own, newest, key=len)

    def summary(self) -> dict:
        st = self.st
        own, newest, h = self.counts()
        path = st.path(st.alg_bag) if st.alg_bag is not None else []
        a = [st.bags[i].a for i in path[:-1]] + ([h] if path else [])
        # s_j per definition: a_j + a_{j-2} + ... along the path
        s = [sum(a[j::-2]) for j in range(len(a))]
        return {
            "reached": self.reached,
            "target": str(self.c),
            "best_ratio": str(self.best_ratio),
            "best_ratio_float": float(self.best_ratio),
            "best_at_vertex": self.best_at,
            "bags": len(st.bags),
            "bag_sizes": [b.size for b in st.bags],
            "path": path,
            "a": a,
            "s": s,
            "holdings_family": own,
            "newest_family": newest,
            "holdings": h,
            "forced_switch_point": str((self.c + self.eps) * max(h, 1) - self._alternating(st.newest)),
        }
