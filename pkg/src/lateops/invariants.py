"""Exact runtime checks: ratio bounds, the admissible-swap algorithm's
accounting inequalities, and local optimality of the final solutions.

Quantities involving sqrt(3) are compared exactly: a + b*sqrt(3) has the
sign of a or b when they agree, and otherwise the sign of a^2 - 3b^2 (or
its negation).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from .algorithms import AdmissibleSwapIS, enumerate_admissible
from .ledger import SolutionLedger
from .oracles import _bits
from .stream import GraphSnapshot


def sign_sqrt3(a: int, b: int) -> int:
    """Sign of a + b*sqrt(3) for integers a, b."""
    if a >= 0 and b >= 0:
        return 0 if a == 0 and b == 0 else 1
    if a <= 0 and b <= 0:
        return -1
    d = a * a - 3 * b * b  # never 0 for integers with a, b != 0
    return (1 if d > 0 else -1) if a > 0 else (1 if d < 0 else -1)


def ge_sqrt3(x: int, y: int) -> bool:
    """x >= sqrt(3) * y."""
    return sign_sqrt3(x, -y) >= 0


def lt_sqrt3(x: int, y: int) -> bool:
    """x < sqrt(3) * y."""
    return sign_sqrt3(x, -y) < 0


# -- ratio bounds with no additive slack -------------------------------------------

def within_3sqrt3_over_2(opt: int, alg: int) -> bool:
    """opt <= (3*sqrt(3)/2) * alg, as 4*opt^2 <= 27*alg^2."""
    return 4 * opt * opt <= 27 * alg * alg


def within_factor(opt_or_alg: int | Fraction, other: int | Fraction, num: int, den: int) -> bool:
    """opt_or_alg <= (num/den) * other."""
    return den * opt_or_alg <= num * other


STRICT_BOUNDS = {
    "is.alg1": ("3*sqrt(3)/2", lambda alg, opt: within_3sqrt3_over_2(opt, alg)),
    "match.alg2": ("3/2", lambda alg, opt: within_factor(opt, alg, 3, 2)),
    "vc.matching": ("2", lambda alg, opt: within_factor(alg, opt, 2, 1)),
    "msf.redrule": ("1", lambda alg, opt: alg == opt),
}


# -- accounting inequalities for the admissible-swap algorithm -----------------------

def alg1_violations(
    g: GraphSnapshot,
    alg: AdmissibleSwapIS,
    ledger: SolutionLedger,
    optima: Iterable[frozenset],
) -> list[str]:
    """Violated inequalities at a point where the algorithm has finished its
    step, for each independent set O in `optima` (X+ = X & O, X- = X - O)."""
    st = alg.state
    A, B, R = st.A, st.B, st.R
    S = A | B
    P = set(ledger.pending)
    out = []
    if S != ledger.accepted or R != ledger.rejected:
        out.append("bookkeeping: A+B or R differs from the ledger")
    if not ge_sqrt3(len(B) + len(R), len(R)):
        out.append(f"|B| >= (sqrt3-1)|R| fails: |B|={len(B)} |R|={len(R)}")
    for O in optima:
        p_plus = len(P & O)
        s_minus = len(S - O)
        if (p_plus or s_minus) and not lt_sqrt3(p_plus, s_minus):
            out.append(f"|P+| < sqrt3|S-| fails: {p_plus} vs {s_minus} (O={sorted(O)})")
        b_plus, b_minus = len(B & O), len(B - O)
        r_plus, r_minus = len(R & O), len(R - O)
        if not ge_sqrt3(b_minus + r_minus, r_plus):
            out.append(f"|B-|+|R-| >= sqrt3|R+| fails: {b_minus}+{r_minus} vs {r_plus} (O={sorted(O)})")
        # |B+|+|R+| <= sqrt3/(sqrt3+1)|B+| + sqrt3/2 |B|, times 2(sqrt3+1):
        # 2x - 3b <= sqrt3 (2 b+ + b - 2x) with x = |B+|+|R+|, b = |B|
        x, b = b_plus + r_plus, len(B)
        if sign_sqrt3(-(2 * x - 3 * b), 2 * b_plus + b - 2 * x) < 0:
            out.append(f"|B+|+|R+| bound fails: B+={b_plus} R+={r_plus} B={b} (O={sorted(O)})")
        for adm in st.swaps:
            t_minus = len(adm.T - O)
            q_plus = len(adm.Q & O)
            if not ge_sqrt3(t_minus, q_plus):
                out.append(f"|T-| >= sqrt3|Q+| fails for swap T={sorted(adm.T)} (O={sorted(O)})")
    return out


def all_maximum_independent_sets(g: GraphSnapshot) -> list[frozenset]:
    """Every maximum independent set, by enumeration (small graphs only)."""
    best = 0
    found: list[int] = []
    masks = g.masks
    for mask in range(1 << g.n):
        size = mask.bit_count()
        if size < best:
            continue
        if any(masks[v] & mask for v in _bits(mask)):
            continue
        if size > best:
            best, found = size, []
        found.append(mask)
    return [frozenset(_bits(m)) for m in found]


def no_admissible_set(g: GraphSnapshot, ledger: SolutionLedger) -> bool:
    return enumerate_admissible(g, ledger.accepted, ledger.pending) is None


def short_augmenting_path(g: GraphSnapshot, M: Iterable[tuple[int, int]]) -> Optional[tuple[int, ...]]:
    """An augmenting path with at most 3 edges, by brute force over the graph."""
    M = list(M)
    mate: dict[int, int] = {}
    for u, v in M:
        mate[u], mate[v] = v, u
    free = [x for x in range(g.n) if x not in mate]
    for u, v in combinations(free, 2):
        if g.has_edge(u, v):
            return (u, v)
    for u, v in M:
        for a, b in ((u, v), (v, u)):
            for x in g.adj[a]:
                if x in mate:
                    continue
                for y in g.adj[b]:
                    if y not in mate and y != x:
                        return (x, a, b, y)
    return None


def strict_bound_holds(algorithm: str, alg_value, opt_value) -> bool:
    _, check = STRICT_BOUNDS[algorithm]
    return check(alg_value, opt_value)
