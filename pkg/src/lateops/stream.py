"""Arrival events, request sequences and graph snapshots.

Vertices are identified by their arrival index.  In the vertex arrival
model a vertex arrives together with its edges to earlier vertices; in the
edge arrival model a single weighted edge arrives and may reveal up to two
new vertices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Container, Iterable, Iterator, Union


class ArrivalKind(enum.Enum):
    VERTEX = "vertex"
    EDGE = "edge"


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    weight: Fraction = Fraction(1)

    def __deepcopy__(self, memo: dict) -> Edge:
        return self  # immutable

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise ValueError(f"self-loop at vertex {self.u}")
        if self.u < 0 or self.v < 0:
            raise ValueError("vertex ids must be non-negative")
        w = self.weight
        if isinstance(w, float):
            raise TypeError("edge weights must be exact (int or Fraction), not float")
        w = Fraction(w)
        if w <= 0:
            raise ValueError(f"edge weight must be positive, got {w}")
        a, b = sorted((self.u, self.v))
        object.__setattr__(self, "u", a)
        object.__setattr__(self, "v", b)
        object.__setattr__(self, "weight", w)

    @property
    def key(self) -> tuple[int, int]:
        return (self.u, self.v)

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class VertexArrival:
    vertex: int
    neighbors: tuple[int, ...] = ()

    def __deepcopy__(self, memo: dict) -> VertexArrival:
        return self  # immutable

    @property
    def kind(self) -> ArrivalKind:
        return ArrivalKind.VERTEX


@dataclass(frozen=True)
class EdgeArrival:
    edge: Edge

    def __deepcopy__(self, memo: dict) -> EdgeArrival:
        return self  # immutable

    @property
    def kind(self) -> ArrivalKind:
        return ArrivalKind.EDGE


ArrivalEvent = Union[VertexArrival, EdgeArrival]


def vertex(vid: int, *neighbors: int) -> VertexArrival:
    return VertexArrival(vid, tuple(neighbors))


def edge(u: int, v: int, weight: int | Fraction = 1) -> EdgeArrival:
    return EdgeArrival(Edge(u, v, Fraction(weight)))


@dataclass(frozen=True)
class RequestSequence:
    kind: ArrivalKind
    events: tuple[ArrivalEvent, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "events", tuple(self.events))

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self) -> Iterator[ArrivalEvent]:
        return iter(self.events)

    def canonical(self) -> RequestSequence:
        """Same sequence with sorted, de-duplicated neighbor lists."""
        if self.kind is ArrivalKind.EDGE:
            return self
        return RequestSequence(
            self.kind,
            tuple(VertexArrival(e.vertex, tuple(sorted(set(e.neighbors)))) for e in self.events),
        )


@dataclass(frozen=True)
class Violation:
    index: int
    rule: str

    def __str__(self) -> str:
        return f"event {self.index}: {self.rule}"


def event_violations(ev: ArrivalEvent, kind: ArrivalKind, n: int, edges: Container[tuple[int, int]]) -> list[str]:
    """Rules broken by `ev` arriving after a prefix with `n` vertices and edge keys `edges`."""
    if ev.kind is not kind:
        return [f"{ev.kind.value} event in {kind.value} model"]
    out = []
    if isinstance(ev, VertexArrival):
        if ev.vertex != n:
            out.append(f"vertex id {ev.vertex} is not the next arrival index {n}")
        if len(set(ev.neighbors)) != len(ev.neighbors):
            out.append("duplicate edge")
        for w in ev.neighbors:
            if w < 0 or w >= min(ev.vertex, n):
                out.append(f"neighbor {w} not yet revealed")
    else:
        e = ev.edge
        # endpoints may reveal at most two fresh ids, in order
        fresh = sorted(x for x in (e.u, e.v) if x >= n)
        if fresh and fresh != list(range(n, n + len(fresh))):
            out.append(f"edge ({e.u},{e.v}) skips vertex ids (next id is {n})")
        if e.key in edges:
            out.append("duplicate edge")
    return out


def validate_sequence(seq: RequestSequence) -> list[Violation]:
    """Return every rule violation in `seq`; an empty list means valid."""
    out: list[Violation] = []
    n = 0
    seen_edges: set[tuple[int, int]] = set()
    for i, ev in enumerate(seq.events):
        rules = event_violations(ev, seq.kind, n, seen_edges)
        out.extend(Violation(i, r) for r in rules)
        if ev.kind is not seq.kind:
            continue
        if isinstance(ev, VertexArrival):
            n = max(n, ev.vertex + 1)
        else:
            seen_edges.add(ev.edge.key)
            n = max(n, ev.edge.v + 1)
    return out


class GraphSnapshot:
    """The graph revealed so far.

    Adjacency is kept both as Python sets and as integer bitmasks; the
    bitmasks back the exact solvers.  Snapshots handed to algorithms and
    adversaries are read-only by convention; only the runner calls `add`.
    """

    __slots__ = ("n", "adj", "masks", "weights", "edge_order")

    def __init__(self) -> None:
        self.n = 0
        self.adj: list[set[int]] = []
        self.masks: list[int] = []
        self.weights: dict[tuple[int, int], Fraction] = {}
        self.edge_order: dict[tuple[int, int], int] = {}

    def _grow(self, n: int) -> None:
        while self.n < n:
            self.adj.append(set())
            self.masks.append(0)
            self.n += 1

    def _link(self, u: int, v: int, w: Fraction) -> None:
        key = (u, v) if u < v else (v, u)
        if key in self.weights:
            raise ValueError(f"duplicate edge {key}")
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.masks[u] |= 1 << v
        self.masks[v] |= 1 << u
        self.weights[key] = w
        self.edge_order[key] = len(self.edge_order)

    def add(self, ev: ArrivalEvent) -> None:
        if isinstance(ev, VertexArrival):
            self._grow(ev.vertex + 1)
            for w in ev.neighbors:
                self._link(ev.vertex, w, Fraction(1))
        else:
            e = ev.edge
            self._grow(e.v + 1)
            self._link(e.u, e.v, e.weight)

    @property
    def m(self) -> int:
        return len(self.weights)

    def edges(self) -> list[Edge]:
        return [Edge(u, v, w) for (u, v), w in self.weights.items()]

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def copy(self) -> GraphSnapshot:
        g = GraphSnapshot()
        g.n = self.n
        g.adj = [set(a) for a in self.adj]
        g.masks = list(self.masks)
        g.weights = dict(self.weights)
        g.edge_order = dict(self.edge_order)
        return g

    def is_subgraph_of(self, other: GraphSnapshot) -> bool:
        if self.n > other.n:
            return False
        return all(other.weights.get(k) == w for k, w in self.weights.items())

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int] | tuple[int, int, int | Fraction]]) -> GraphSnapshot:
        g = cls()
        g._grow(n)
        for e in edges:
            w = Fraction(e[2]) if len(e) > 2 else Fraction(1)  # type: ignore[misc]
            g._link(e[0], e[1], w)
        return g

    def __repr__(self) -> str:
        return f"GraphSnapshot(n={self.n}, m={self.m})"


def build_snapshot(seq: RequestSequence, prefix_len: int | None = None) -> GraphSnapshot:
    if prefix_len is None:
        prefix_len = len(seq)
    if not 0 <= prefix_len <= len(seq):
        raise IndexError(f"prefix length {prefix_len} out of range 0..{len(seq)}")
    g = GraphSnapshot()
    for ev in seq.events[:prefix_len]:
        g.add(ev)
    return g


# -- event file format -------------------------------------------------------


class EventFormatError(ValueError):
    def __init__(self, line: int, reason: str) -> None:
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise EventFormatError(lineno, f"{what} {tok!r} is not an integer") from None


def parse_events(text: str) -> RequestSequence:
    kind: ArrivalKind | None = None
    events: list[ArrivalEvent] = []
    linenos: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if kind is None:
            if toks[0] != "model" or len(toks) != 2 or toks[1] not in ("vertex", "edge"):
                raise EventFormatError(lineno, "expected 'model vertex' or 'model edge'")
            kind = ArrivalKind(toks[1])
            continue
        tag = toks[0]
        if tag == "v":
            if kind is not ArrivalKind.VERTEX:
                raise EventFormatError(lineno, "vertex event in edge model")
            if len(toks) < 2:
                raise EventFormatError(lineno, "vertex event needs an id")
            vid = _int(toks[1], lineno, "vertex id")
            nbrs = tuple(_int(t, lineno, "neighbor id") for t in toks[2:])
            events.append(VertexArrival(vid, nbrs))
            linenos.append(lineno)
        elif tag == "e":
            if kind is not ArrivalKind.EDGE:
                raise EventFormatError(lineno, "edge event in vertex model")
            if len(toks) not in (3, 4):
                raise EventFormatError(lineno, "edge event is 'e <u> <v> [<weight>]'")
            u = _int(toks[1], lineno, "endpoint")
            v = _int(toks[2], lineno, "endpoint")
            w = _int(toks[3], lineno, "weight") if len(toks) == 4 else 1
            try:
                events.append(EdgeArrival(Edge(u, v, Fraction(w))))
            except ValueError as exc:
                raise EventFormatError(lineno, str(exc)) from None
            linenos.append(lineno)
        elif tag == "model":
            raise EventFormatError(lineno, "model declared twice")
        else:
            raise EventFormatError(lineno, f"unknown event tag {tag!r}")
    if kind is None:
        raise EventFormatError(1, "missing model line")
    seq = RequestSequence(kind, tuple(events))
    bad = validate_sequence(seq)
    if bad:
        raise EventFormatError(linenos[bad[0].index], bad[0].rule)
    return seq


def format_event(ev: ArrivalEvent) -> str:
    if isinstance(ev, VertexArrival):
        return " ".join(["v", str(ev.vertex), *map(str, sorted(ev.neighbors))])
    e = ev.edge
    if e.weight.denominator != 1:
        raise ValueError(f"weight {e.weight} is not an integer; the event format stores integers only")
    return f"e {e.u} {e.v} {e.weight.numerator}"


def serialize_events(seq: RequestSequence) -> str:
    lines = [f"model {seq.kind.value}"]
    lines.extend(format_event(ev) for ev in seq.events)
    return "\n".join(lines) + "\n"


@dataclass
class EventStream:
    """Growing sequence plus its snapshot, used while events are emitted."""

    kind: ArrivalKind
    events: list[ArrivalEvent] = field(default_factory=list)
    graph: GraphSnapshot = field(default_factory=GraphSnapshot)

    def push(self, ev: ArrivalEvent) -> None:
        self.graph.add(ev)
        self.events.append(ev)

    def freeze(self) -> RequestSequence:
        return RequestSequence(self.kind, tuple(self.events))
