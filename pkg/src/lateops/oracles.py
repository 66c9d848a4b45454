"""Exact offline optima for the four problems.

Independent set and matching use branch-and-bound over integer bitmasks;
vertex cover is the complement of a maximum independent set; spanning
forest is Kruskal.  Small-instance enumeration versions exist as a second
route for cross-checking the searches.  Caps raise instead of
approximating.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Optional

from .stream import Edge, GraphSnapshot

DEFAULT_VERTEX_CAP = 30
DEFAULT_EDGE_CAP = 40
ENUMERATION_CAP = 16


class OracleCapExceeded(RuntimeError):
    pass


def cap_from_env(default: int) -> int:
    val = os.environ.get("LATEOPS_CAP")
    return int(val) if val else default


@dataclass
class OracleResult:
    value: int | Fraction
    witness: frozenset
    nodes_explored: int = 0


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for x in items:
        m |= 1 << x
    return m


# -- independent set ----------------------------------------------------------


class _MIS:
    def __init__(self, masks: list[int]) -> None:
        self.masks = masks
        self.best_size = -1
        self.best = 0
        self.nodes = 0

    def run(self, cand: int) -> tuple[int, int]:
        self._rec(cand, 0, 0)
        return self.best_size, self.best

    def _rec(self, cand: int, chosen: int, size: int) -> None:
        self.nodes += 1
        masks = self.masks
        # take vertices of degree <= 1; some maximum set always contains them
        changed = True
        while changed and cand:
            changed = False
            c = cand
            while c:
                low = c & -c
                c ^= low
                if not cand & low:
                    continue
                nb = masks[low.bit_length() - 1] & cand
                if nb & (nb - 1) == 0:
                    chosen |= low
                    size += 1
                    cand &= ~(low | nb)
                    c &= ~nb
                    changed = True
        if not cand:
            if size > self.best_size:
                self.best_size, self.best = size, chosen
            return
        if size + cand.bit_count() <= self.best_size:
            return
        pick, deg = -1, -1
        c = cand
        while c:
            low = c & -c
            c ^= low
            v = low.bit_length() - 1
            d = (masks[v] & cand).bit_count()
            if d > deg:
                pick, deg = v, d
        bit = 1 << pick
        self._rec(cand & ~(bit | masks[pick]), chosen | bit, size + 1)
        self._rec(cand & ~bit, chosen, size)


def max_independent_mask(masks: list[int], cand: int) -> tuple[int, int]:
    """Maximum independent set inside vertex mask `cand`: (size, witness mask)."""
    if not cand:
        return 0, 0
    return _MIS(masks).run(cand)


def lexmin_max_independent_mask(masks: list[int], cand: int) -> int:
    """Lexicographically smallest sorted maximum independent set inside `cand`."""
    target, _ = max_independent_mask(masks, cand)
    chosen, size = 0, 0
    # isolated vertices belong to every maximum independent set
    for v in _bits(cand):
        if not masks[v] & cand:
            chosen |= 1 << v
            size += 1
    rest = cand & ~chosen
    for v in _bits(rest):
        bit = 1 << v
        if not rest & bit:
            continue
        sub = rest & ~(bit | masks[v])
        if size + 1 + max_independent_mask(masks, sub)[0] == target:
            chosen |= bit
            size += 1
            rest = sub
        else:
            rest &= ~bit
    return chosen


def opt_independent_set(g: GraphSnapshot, cap: Optional[int] = None) -> OracleResult:
    cap = cap_from_env(DEFAULT_VERTEX_CAP) if cap is None else cap
    if g.n > cap:
        raise OracleCapExceeded(f"independent set oracle: n={g.n} exceeds cap {cap}")
    solver = _MIS(g.masks)
    size, wit = solver.run((1 << g.n) - 1) if g.n else (0, 0)
    return OracleResult(size, frozenset(_bits(wit)), solver.nodes)


def enumerate_independent_set(g: GraphSnapshot) -> OracleResult:
    """Brute force over all 2^n vertex subsets."""
    n = g.n
    if n > ENUMERATION_CAP:
        raise OracleCapExceeded(f"enumeration: n={n} exceeds {ENUMERATION_CAP}")
    indep = bytearray(1 << n)
    indep[0] = 1
    best, best_s = 0, 0
    masks = g.masks
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        if indep[rest] and not masks[low.bit_length() - 1] & rest:
            indep[s] = 1
            c = s.bit_count()
            if c > best:
                best, best_s = c, s
    return OracleResult(best, frozenset(_bits(best_s)), 1 << n)


def is_independent(g: GraphSnapshot, verts: Iterable[int]) -> bool:
    m = mask_of(verts)
    return all(not g.masks[v] & m for v in _bits(m))


def forest_independent_set(g: GraphSnapshot) -> frozenset:
    """Exact maximum independent set of a forest by leaf elimination."""
    deg = [len(a) for a in g.adj]
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] <= 1]
    out = set()
    removed = 0

    def kill(x: int) -> None:
        nonlocal removed
        alive[x] = False
        removed += 1
        for y in g.adj[x]:
            if alive[y]:
                deg[y] -= 1
                if deg[y] <= 1:
                    stack.append(y)

    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        out.add(v)
        nbrs = [y for y in g.adj[v] if alive[y]]
        kill(v)
        for y in nbrs:
            if alive[y]:
                kill(y)
    if removed != g.n:
        raise ValueError("graph is not a forest")
    return frozenset(out)


# -- vertex cover -------------------------------------------------------------


def opt_vertex_cover(g: GraphSnapshot, cap: Optional[int] = None) -> OracleResult:
    mis = opt_independent_set(g, cap)
    cover = frozenset(range(g.n)) - mis.witness
    return OracleResult(len(cover), cover, mis.nodes_explored)


def is_vertex_cover(g: GraphSnapshot, verts: Iterable[int]) -> bool:
    c = set(verts)
    return all(u in c or v in c for (u, v) in g.weights)


# -- matching -----------------------------------------------------------------


class _MM:
    def __init__(self, masks: list[int]) -> None:
        self.masks = masks
        self.best = -1
        self.best_pairs: tuple[tuple[int, int], ...] = ()
        self.nodes = 0

    def run(self, avail: int) -> None:
        self._rec(avail, ())

    def _rec(self, avail: int, pairs: tuple[tuple[int, int], ...]) -> None:
        self.nodes += 1
        masks = self.masks
        live = 0
        first = -1
        c = avail
        while c:
            low = c & -c
            c ^= low
            v = low.bit_length() - 1
            if masks[v] & avail:
                live |= low
                if first < 0:
                    first = v
        if first < 0:
            if len(pairs) > self.best:
                self.best, self.best_pairs = len(pairs), pairs
            return
        if len(pairs) + live.bit_count() // 2 <= self.best:
            return
        vb = 1 << first
        for w in _bits(masks[first] & avail):
            self._rec(avail & ~(vb | (1 << w)), pairs + ((first, w),))
        self._rec(avail & ~vb, pairs)


def opt_matching(g: GraphSnapshot, cap: Optional[int] = None) -> OracleResult:
    cap = cap_from_env(DEFAULT_EDGE_CAP) if cap is None else cap
    if g.m > cap:
        raise OracleCapExceeded(f"matching oracle: m={g.m} exceeds cap {cap}")
    solver = _MM(g.masks)
    solver.run((1 << g.n) - 1)
    best = max(solver.best, 0)
    return OracleResult(best, frozenset(solver.best_pairs), solver.nodes)


def enumerate_matching(g: GraphSnapshot) -> OracleResult:
    """Brute force over edge subsets, largest first."""
    edges = sorted(g.weights)
    if len(edges) > ENUMERATION_CAP + 4:
        raise OracleCapExceeded(f"enumeration: m={len(edges)} too large")
    explored = 0
    for k in range(min(len(edges), g.n // 2), 0, -1):
        for combo in combinations(edges, k):
            explored += 1
            used: set[int] = set()
            ok = True
            for u, v in combo:
                if u in used or v in used:
                    ok = False
                    break
                used.update((u, v))
            if ok:
                return OracleResult(k, frozenset(combo), explored)
    return OracleResult(0, frozenset(), explored)


def is_matching(edges: Iterable[tuple[int, int]]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


# -- spanning forest -------------------------------------------------------------


class DisjointSet:
    def __init__(self) -> None:
        self.parent: dict[Hashable, Hashable] = {}
        self.size: dict[Hashable, int] = {}

    def add(self, x: Hashable) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1

    def find(self, x: Hashable) -> Hashable:
        self.add(x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: Hashable, b: Hashable) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def kruskal(n: int, edges: Iterable[Edge]) -> list[Edge]:
    ds = DisjointSet()
    out = []
    for e in sorted(edges, key=lambda e: (e.weight, e.u, e.v)):
        if ds.union(e.u, e.v):
            out.append(e)
    return out


def opt_spanning_forest(g: GraphSnapshot) -> OracleResult:
    forest = kruskal(g.n, g.edges())
    return OracleResult(sum((e.weight for e in forest), Fraction(0)), frozenset(e.key for e in forest), len(forest))


def is_spanning_forest(g: GraphSnapshot, keys: Iterable[tuple[int, int]]) -> bool:
    """True iff `keys` is acyclic and connects every component of `g`."""
    ds = DisjointSet()
    count = 0
    for u, v in keys:
        if (u, v) not in g.weights or not ds.union(u, v):
            return False
        count += 1
    full = DisjointSet()
    for u, v in g.weights:
        full.union(u, v)
    comps = len({full.find(v) for v in range(g.n)})
    return count == g.n - comps


def forest_weight(g: GraphSnapshot, keys: Iterable[tuple[int, int]]) -> Fraction:
    return sum((g.weights[k] for k in keys), Fraction(0))
