from __future__ import annotations

from typing import ClassVar, Optional

from ..ledger import Action, DecisionModel, Item, Move, SolutionLedger
from ..problems import Problem
from ..stream import ArrivalEvent, EdgeArrival, GraphSnapshot


def current_item(event: ArrivalEvent) -> Item:
    if isinstance(event, EdgeArrival):
        return event.edge.key
    return event.vertex


class OnlineAlgorithm:
    """Base class: one instance per run, `step` called once per event.

    `step` sees the event, the snapshot including it, and the ledger, and
    returns the moves for this step.  The runner applies them.
    """

    name: ClassVar[str] = ""
    problem: ClassVar[Problem]
    models: ClassVar[tuple[DecisionModel, ...]] = ()

    def __init__(self, model: Optional[DecisionModel] = None) -> None:
        if model is None:
            model = self.models[0]
        if model not in self.models:
            allowed = ", ".join(m.value for m in self.models)
            raise ValueError(f"{self.name} runs in models [{allowed}], not {model.value}")
        self.model = model
        self.reset()

    def reset(self) -> None:
        pass

    def step(self, event: ArrivalEvent, g: GraphSnapshot, ledger: SolutionLedger) -> list[Move]:
        raise NotImplementedError

    # helpers for building moves
    @staticmethod
    def take(ledger: SolutionLedger, item: Item) -> Move:
        act = Action.ACCEPT if item in ledger.current else Action.LATE_ACCEPT
        return Move(ledger.step, act, item)

    @staticmethod
    def drop(ledger: SolutionLedger, item: Item) -> Move:
        return Move(ledger.step, Action.LATE_REJECT, item)

    def decline(self, ledger: SolutionLedger, item: Item) -> list[Move]:
        """Reject the current item where the model asks for it, else leave it pending."""
        if self.model.forces_decision:
            return [Move(ledger.step, Action.REJECT, item)]
        return []

    @property
    def label(self) -> str:
        return f"{self.name}[{self.model.value}]"

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.label}>"
