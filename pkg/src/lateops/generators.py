"""Seeded request-sequence generators.

A static graph is a vertex count plus a list of (u, v, weight) edges; the
`*_sequence` helpers turn one into an arrival sequence.  Vertices are
relabeled by arrival order, so the sequence always satisfies the id rules.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Optional, Sequence

from .params import as_int, parse_spec
from .stream import ArrivalKind, EdgeArrival, RequestSequence, VertexArrival, edge

StaticEdge = tuple[int, int, Fraction]


def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} not in [0, 1]")


def vertex_sequence(n: int, edges: Sequence[tuple[int, ...]], order: Optional[Sequence[int]] = None) -> RequestSequence:
    """Vertex arrivals of the graph, vertices arriving in `order`."""
    order = list(range(n)) if order is None else list(order)
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    back: list[list[int]] = [[] for _ in range(n)]
    for e in edges:
        a, b = pos[e[0]], pos[e[1]]
        if a == b:
            raise ValueError("self-loop")
        lo, hi = min(a, b), max(a, b)
        back[hi].append(lo)
    return RequestSequence(ArrivalKind.VERTEX, tuple(VertexArrival(i, tuple(sorted(back[i]))) for i in range(n)))


def edge_sequence(edges: Sequence[tuple[int, ...]], order: Optional[Sequence[int]] = None) -> RequestSequence:
    """Edge arrivals in `order` (indices into `edges`); vertex ids are
    assigned by first appearance.  Isolated vertices do not appear."""
    idx = list(range(len(edges))) if order is None else list(order)
    label: dict[int, int] = {}
    out = []
    for i in idx:
        e = edges[i]
        u, v = e[0], e[1]
        for x in (u, v):
            if x not in label:
                label[x] = len(label)
        w = e[2] if len(e) > 2 else 1
        out.append(edge(label[u], label[v], Fraction(w)))
    return RequestSequence(ArrivalKind.EDGE, tuple(out))


def to_sequence(n: int, edges: Sequence[tuple[int, ...]], kind: ArrivalKind, rng: Optional[random.Random] = None) -> RequestSequence:
    """Sequence of the given kind; a random arrival order when `rng` is given."""
    if kind is ArrivalKind.VERTEX:
        order = list(range(n))
        if rng is not None:
            rng.shuffle(order)
        return vertex_sequence(n, edges, order)
    idx = list(range(len(edges)))
    if rng is not None:
        rng.shuffle(idx)
    return edge_sequence(edges, idx)


def static_graph(seq: RequestSequence) -> tuple[int, list[StaticEdge]]:
    n = 0
    edges: list[StaticEdge] = []
    for ev in seq.events:
        if isinstance(ev, VertexArrival):
            n = max(n, ev.vertex + 1)
            edges.extend((w, ev.vertex, Fraction(1)) for w in ev.neighbors)
        else:
            n = max(n, ev.edge.v + 1)
            edges.append((ev.edge.u, ev.edge.v, ev.edge.weight))
    return n, edges


# -- graph families ---------------------------------------------------------------

def gnp_edges(n: int, p: float, rng: random.Random) -> list[StaticEdge]:
    _check_p(p)
    return [(u, v, Fraction(1)) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]


def gen_gnp(n: int, p: float, seed: int = 0, kind: ArrivalKind = ArrivalKind.VERTEX) -> RequestSequence:
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = random.Random(seed)
    return to_sequence(n, gnp_edges(n, p, rng), kind)


def gen_path(n: int, kind: ArrivalKind = ArrivalKind.VERTEX) -> RequestSequence:
    if n < 1:
        raise ValueError("n must be positive")
    return to_sequence(n, [(i, i + 1, Fraction(1)) for i in range(n - 1)], kind)


def gen_cycle(n: int, kind: ArrivalKind = ArrivalKind.VERTEX) -> RequestSequence:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return to_sequence(n, [(i, (i + 1) % n, Fraction(1)) for i in range(n)], kind)


def gen_bipartite(a: int, b: int, p: float, seed: int = 0, kind: ArrivalKind = ArrivalKind.VERTEX) -> RequestSequence:
    if a < 0 or b < 0:
        raise ValueError("side sizes must be non-negative")
    _check_p(p)
    rng = random.Random(seed)
    edges = [(u, a + v, Fraction(1)) for u in range(a) for v in range(b) if rng.random() < p]
    return to_sequence(a + b, edges, kind)


def gen_weights(seq: RequestSequence, dist: str = "int:1-100", seed: int = 0) -> RequestSequence:
    """Reweight an edge-arrival sequence.

    `dist` is ``unit``, ``int:LO-HI`` (uniform integers) or ``pow2:K``
    (powers of two up to 2**K).
    """
    if seq.kind is not ArrivalKind.EDGE:
        raise ValueError("weights apply to edge-arrival sequences")
    rng = random.Random(seed)
    name, _, arg = dist.partition(":")
    if name == "unit":
        draw = lambda: 1  # noqa: E731
    elif name == "int":
        lo, _, hi = arg.partition("-")
        lo_i, hi_i = int(lo or 1), int(hi or lo or 100)
        if not 1 <= lo_i <= hi_i:
            raise ValueError(f"bad weight range {arg!r}")
        draw = lambda: rng.randint(lo_i, hi_i)  # noqa: E731
    elif name == "pow2":
        k = int(arg or 10)
        draw = lambda: 2 ** rng.randint(0, k)  # noqa: E731
    else:
        raise ValueError(f"unknown weight distribution {dist!r}")
    events = tuple(edge(ev.edge.u, ev.edge.v, draw()) for ev in seq.events if isinstance(ev, EdgeArrival))
    return RequestSequence(seq.kind, events)


def order_shuffle(seq: RequestSequence, seed: int = 0) -> RequestSequence:
    """The same graph with a uniformly random arrival order."""
    n, edges = static_graph(seq)
    return to_sequence(n, edges, seq.kind, random.Random(seed))


# -- registry ---------------------------------------------------------------------

GENERATORS = ("gen.gnp", "gen.path", "gen.cycle", "gen.bipartite")


def make_sequence(spec: str, kind: ArrivalKind, seed: int = 0) -> RequestSequence:
    """Build a sequence from ``gen.<family>:params``.

    Extra parameters: ``order=shuffle`` randomizes the arrival order and
    ``w=<dist>`` draws edge weights (edge arrivals only), both seeded.
    """
    name, params = parse_spec(spec)
    order = params.pop("order", "given")
    wdist = params.pop("w", None)
    if name == "gen.gnp":
        seq = gen_gnp(as_int(params, "n"), float(params.pop("p", "0.5")), seed, kind)
        params.pop("n")
    elif name == "gen.path":
        seq = gen_path(as_int(params, "n"), kind)
        params.pop("n")
    elif name == "gen.cycle":
        seq = gen_cycle(as_int(params, "n"), kind)
        params.pop("n")
    elif name == "gen.bipartite":
        seq = gen_bipartite(as_int(params, "a"), as_int(params, "b"), float(params.pop("p", "0.5")), seed, kind)
        params.pop("a")
        params.pop("b")
    else:
        raise ValueError(f"unknown generator {name!r}; known: {', '.join(GENERATORS)}")
    if params:
        raise ValueError(f"unexpected parameters for {name}: {sorted(params)}")
    if order == "shuffle":
        seq = order_shuffle(seq, seed + 1)
    elif order != "given":
        raise ValueError(f"order must be 'given' or 'shuffle', not {order!r}")
    if wdist is not None:
        seq = gen_weights(seq, wdist, seed + 2)
    return seq
