"""Online graph problems under four irrevocability models.

Independent set, matching, vertex cover and minimum spanning forest, each
in the standard, late accept, late reject and late accept/reject models:
online algorithms, adaptive lower-bound adversaries, exact offline
oracles and a harness that measures competitive ratios.
"""

from .harness import ExperimentConfig, ExperimentReport, OnlineSession, run_experiment, run_online
from .ledger import Action, DecisionModel, IllegalMove, Move, SolutionLedger
from .problems import Problem, competitive_ratio
from .stream import (
    ArrivalKind,
    Edge,
    EdgeArrival,
    GraphSnapshot,
    RequestSequence,
    VertexArrival,
    build_snapshot,
    parse_events,
    serialize_events,
    validate_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "Action", "ArrivalKind", "DecisionModel", "Edge", "EdgeArrival", "ExperimentConfig",
    "ExperimentReport", "GraphSnapshot", "IllegalMove", "Move", "OnlineSession", "Problem",
    "RequestSequence", "SolutionLedger", "VertexArrival", "build_snapshot", "competitive_ratio",
    "parse_events", "run_experiment", "run_online", "serialize_events", "validate_sequence",
]
