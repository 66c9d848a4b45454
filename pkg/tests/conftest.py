from fractions import Fraction

from hypothesis import strategies as st

from lateops.stream import ArrivalKind, GraphSnapshot, RequestSequence, VertexArrival, edge


@st.composite
def vertex_sequences(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    events = []
    for v in range(n):
        nbrs = draw(st.sets(st.integers(0, v - 1), max_size=v)) if v else set()
        events.append(VertexArrival(v, tuple(sorted(nbrs))))
    return RequestSequence(ArrivalKind.VERTEX, tuple(events))


@st.composite
def edge_sequences(draw, max_n=7, max_w=1):
    n_limit = draw(st.integers(2, max_n))
    seen = set()
    events = []
    n = 0
    for _ in range(draw(st.integers(0, 12))):
        hi = min(n + 2, n_limit)
        options = [
            (u, v) for v in range(hi) for u in range(v)
            if (u, v) not in seen and not (v == n + 1 and u != n)
        ]
        if not options:
            break
        u, v = draw(st.sampled_from(options))
        seen.add((u, v))
        n = max(n, v + 1)
        events.append(edge(u, v, draw(st.integers(1, max_w))))
    return RequestSequence(ArrivalKind.EDGE, tuple(events))


@st.composite
def graphs(draw, max_n=10, p=None):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = [pr for pr in pairs if draw(st.booleans())]
    return GraphSnapshot.from_edges(n, chosen)


def frac(x):
    return Fraction(x)


# acceptance verdicts, printed as one line each at the end of the session
VERDICTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in VERDICTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
