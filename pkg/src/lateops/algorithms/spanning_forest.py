"""Online minimum spanning forest in the edge arrival model."""

from __future__ import annotations

from collections import deque

from ..ledger import DecisionModel, Move, SolutionLedger
from ..oracles import DisjointSet
from ..problems import Problem
from ..stream import EdgeArrival, GraphSnapshot
from .base import OnlineAlgorithm

Key = tuple[int, int]


class ForestState:
    def __init__(self) -> None:
        self.F: set[Key] = set()
        self.adj: dict[int, set[int]] = {}
        self.components = DisjointSet()

    def link(self, k: Key) -> None:
        u, v = k
        self.F.add(k)
        self.adj.setdefault(u, set()).add(v)
        self.adj.setdefault(v, set()).add(u)

    def cut(self, k: Key) -> None:
        u, v = k
        self.F.remove(k)
        self.adj[u].remove(v)
        self.adj[v].remove(u)

    def path(self, src: int, dst: int) -> list[Key]:
        """Edges of the unique forest path src -> dst."""
        parent = {src: src}
        todo = deque([src])
        while todo:
            x = todo.popleft()
            if x == dst:
                break
            for y in self.adj.get(x, ()):
                if y not in parent:
                    parent[y] = x
                    todo.append(y)
        out = []
        x = dst
        while x != src:
            p = parent[x]
            out.append((p, x) if p < x else (x, p))
            x = p
        return out


class StandardMSF(OnlineAlgorithm):
    """Keep every edge that joins two components; weights are ignored."""

    name = "msf.standard"
    problem = Problem.MSF
    models = (DecisionModel.STANDARD, DecisionModel.LATE_REJECT)

    def reset(self) -> None:
        self.state = ForestState()

    def step(self, event: EdgeArrival, g: GraphSnapshot, ledger: SolutionLedger) -> list[Move]:
        k = event.edge.key
        if self.state.components.union(*k):
            self.state.link(k)
            return [self.take(ledger, k)]
        return self.decline(ledger, k)


class RedRuleMSF(OnlineAlgorithm):
    """Join components; on a cycle, evict its heaviest edge.

    Heaviest is by (weight, arrival order), so among equal weights the most
    recent edge goes, and an arriving edge that ties the maximum is rejected.
    """

    name = "msf.redrule"
    problem = Problem.MSF
    models = (DecisionModel.LATE_REJECT, DecisionModel.LATE_ACCEPT_REJECT)

    def reset(self) -> None:
        self.state = ForestState()

    def step(self, event: EdgeArrival, g: GraphSnapshot, ledger: SolutionLedger) -> list[Move]:
        st = self.state
        k = event.edge.key
        if st.components.union(*k):
            st.link(k)
            return [self.take(ledger, k)]
        cycle = st.path(*k) + [k]
        worst = max(cycle, key=lambda e: (g.weights[e], g.edge_order[e]))
        if worst == k:
            return self.decline(ledger, k)
        st.cut(worst)
        st.link(k)
        return [self.drop(ledger, worst), self.take(ledger, k)]
