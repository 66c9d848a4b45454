"""Adaptive adversaries and the name registry used by the CLI.

Specs look like ``adv.is.bags:c=2,eps=0.05,n1=200,budget=10000``.
"""

from __future__ import annotations

from fractions import Fraction

from ..params import as_fraction, as_int, parse_spec
from .base import Adversary
from .independent_set import BagIS, LateAcceptPendantIS, PathIS, PendantIS
from .matching import ExtendMatching, LateAcceptRejectMatching, LateRejectMatching
from .spanning_forest import HubMSF
from .vertex_cover import LateRejectPendantVC, PairsVC, PendantVC

ADVERSARIES: dict[str, type[Adversary]] = {
    cls.name: cls
    for cls in (
        PendantIS, PathIS, LateAcceptPendantIS, BagIS,
        ExtendMatching, LateRejectMatching, LateAcceptRejectMatching,
        PendantVC, LateRejectPendantVC, PairsVC,
        HubMSF,
    )
}

_DEFAULT_SIZE = 20


def make_adversary(spec: str) -> Adversary:
    name, params = parse_spec(spec)
    try:
        cls = ADVERSARIES[name]
    except KeyError:
        raise ValueError(f"unknown adversary {name!r}; known: {', '.join(sorted(ADVERSARIES))}") from None
    p = dict(params)
    if cls is BagIS:
        adv: Adversary = BagIS(
            c=as_fraction(p, "c", Fraction(2)),
            eps=as_fraction(p, "eps", Fraction(1, 20)),
            n1=as_int(p, "n1", 200),
            budget=as_int(p, "budget", 10_000),
        )
        used = {"c", "eps", "n1", "budget"}
    elif cls in (ExtendMatching, LateRejectMatching, LateAcceptRejectMatching):
        adv = cls(as_int(p, "m", 10))
        used = {"m"}
    elif cls is PairsVC:
        adv = PairsVC(as_int(p, "g", 5), flood=as_int(p, "flood", 0))
        used = {"g", "flood"}
    elif cls is HubMSF:
        adv = HubMSF(as_int(p, "n", 12), W=as_int(p, "W", 1000))
        used = {"n", "W"}
    else:
        adv = cls(as_int(p, "n", _DEFAULT_SIZE))
        used = {"n"}
    extra = sorted(set(p) - used)
    if extra:
        raise ValueError(f"unexpected parameters for {name}: {extra}")
    return adv


__all__ = [
    "ADVERSARIES", "Adversary", "BagIS", "ExtendMatching", "HubMSF", "LateAcceptPendantIS",
    "LateAcceptRejectMatching", "LateRejectMatching", "LateRejectPendantVC", "PairsVC",
    "PathIS", "PendantIS", "PendantVC", "make_adversary",
]
