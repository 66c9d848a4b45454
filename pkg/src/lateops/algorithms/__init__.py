"""Online algorithms and the name registry used by the CLI.

Registry names take optional parameters, e.g. ``is.threshold:c=3`` or
``vc.reset:b=2``; ``model=<std|la|lr|lar>`` picks the decision model for
algorithms that are valid in more than one.
"""

from __future__ import annotations

from typing import Optional

from ..ledger import DecisionModel
from ..params import as_int, parse_spec
from .base import OnlineAlgorithm, current_item
from .independent_set import (
    AdmissibleSet,
    AdmissibleSearchTooLarge,
    AdmissibleSwapIS,
    Alg1State,
    GreedyIS,
    SwapIS,
    ThresholdIS,
    enumerate_admissible,
    find_admissible_min_conflict,
    meets_sqrt3,
)
from .matching import GreedyMatching, MatchingState, ShortAugmentingMatching, find_length3_augmenting_path
from .spanning_forest import ForestState, RedRuleMSF, StandardMSF
from .vertex_cover import MaximalMatchingVC, ResetVC, StandardVC

ALGORITHMS: dict[str, type[OnlineAlgorithm]] = {
    cls.name: cls
    for cls in (
        GreedyIS, SwapIS, ThresholdIS, AdmissibleSwapIS,
        GreedyMatching, ShortAugmentingMatching,
        StandardVC, MaximalMatchingVC, ResetVC,
        StandardMSF, RedRuleMSF,
    )
}


def make_algorithm(spec: str, model: Optional[DecisionModel] = None) -> OnlineAlgorithm:
    """Build an algorithm from a registry spec.

    An explicit ``model=`` parameter wins over `model`; if neither is given
    the algorithm's first (native) model is used.
    """
    name, params = parse_spec(spec)
    try:
        cls = ALGORITHMS[name]
    except KeyError:
        raise ValueError(f"unknown algorithm {name!r}; known: {', '.join(sorted(ALGORITHMS))}") from None
    if "model" in params:
        model = DecisionModel.parse(params.pop("model"))
    elif model is not None and model not in cls.models:
        raise ValueError(f"{name} does not run in the {model.value} model")
    kwargs: dict = {}
    if cls is ThresholdIS:
        kwargs["c"] = as_int(params, "c", 2)
        params.pop("c", None)
    elif cls is ResetVC:
        kwargs["b"] = as_int(params, "b", 0)
        params.pop("b", None)
    if "cap" in params and cls in (ThresholdIS, ResetVC):
        kwargs["cap"] = int(params.pop("cap"))
    if params:
        raise ValueError(f"unexpected parameters for {name}: {sorted(params)}")
    return cls(model=model, **kwargs)


__all__ = [
    "ALGORITHMS", "AdmissibleSet", "AdmissibleSearchTooLarge", "AdmissibleSwapIS", "Alg1State",
    "ForestState", "GreedyIS", "GreedyMatching", "MatchingState", "MaximalMatchingVC",
    "OnlineAlgorithm", "RedRuleMSF", "ResetVC", "ShortAugmentingMatching", "StandardMSF",
    "StandardVC", "SwapIS", "ThresholdIS", "current_item", "enumerate_admissible",
    "find_admissible_min_conflict", "find_length3_augmenting_path", "make_algorithm", "meets_sqrt3",
]
