"""Irrevocability bookkeeping for the four decision models.

Every revealed item is in exactly one of three sets: accepted (S),
rejected (R) or pending (P).  Which transitions between them are legal,
and when, is what distinguishes the models:

=================  ==========  ==========  ===========  ===========
model              accept now  reject now  late accept  late reject
=================  ==========  ==========  ===========  ===========
STANDARD           yes         yes         no           no
LATE_ACCEPT        yes         no          yes          no
LATE_REJECT        yes         yes         no           yes
LATE_ACCEPT_REJECT yes         no          yes          yes
=================  ==========  ==========  ===========  ===========

In STANDARD and LATE_REJECT the current item must be decided before the
next item is revealed.  Nothing ever leaves R.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Hashable, Iterable, Optional, Union

Item = Union[int, tuple[int, int]]


class DecisionModel(enum.Enum):
    STANDARD = "std"
    LATE_ACCEPT = "la"
    LATE_REJECT = "lr"
    LATE_ACCEPT_REJECT = "lar"

    @property
    def allows_late_accept(self) -> bool:
        return self in (DecisionModel.LATE_ACCEPT, DecisionModel.LATE_ACCEPT_REJECT)

    @property
    def allows_late_reject(self) -> bool:
        return self in (DecisionModel.LATE_REJECT, DecisionModel.LATE_ACCEPT_REJECT)

    @property
    def forces_decision(self) -> bool:
        return not self.allows_late_accept

    @classmethod
    def parse(cls, text: str) -> DecisionModel:
        key = text.strip().lower().replace("-", "_")
        aliases = {
            "std": cls.STANDARD, "standard": cls.STANDARD,
            "la": cls.LATE_ACCEPT, "late_accept": cls.LATE_ACCEPT,
            "lr": cls.LATE_REJECT, "late_reject": cls.LATE_REJECT,
            "lar": cls.LATE_ACCEPT_REJECT, "late_accept_reject": cls.LATE_ACCEPT_REJECT,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown decision model {text!r}") from None


class ItemKind(enum.Enum):
    VERTEX = "vertex"
    EDGE = "edge"


class Action(enum.Enum):
    REVEAL = "reveal"
    ACCEPT = "accept"
    REJECT = "reject"
    LATE_ACCEPT = "lateAccept"
    LATE_REJECT = "lateReject"
    FINALIZE = "finalize"


@dataclass(frozen=True)
class Move:
    step: int
    action: Action
    item: Optional[Item] = None

    def __deepcopy__(self, memo: dict) -> Move:
        return self  # immutable

    def to_json(self, kind: ItemKind) -> str:
        return json.dumps(
            {"step": self.step, "action": self.action.value, "item": item_name(self.item, kind)},
            separators=(",", ":"),
        )


def item_name(item: Optional[Item], kind: ItemKind) -> Optional[str]:
    if item is None:
        return None
    if kind is ItemKind.VERTEX:
        return f"v{item}"
    u, v = item  # type: ignore[misc]
    return f"e{u}-{v}"


def parse_item(name: str) -> Item:
    if name.startswith("v"):
        return int(name[1:])
    if name.startswith("e"):
        u, v = name[1:].split("-")
        return (int(u), int(v))
    raise ValueError(f"bad item name {name!r}")


def move_from_json(line: str) -> Move:
    d = json.loads(line)
    item = d.get("item")
    return Move(d["step"], Action(d["action"]), None if item is None else parse_item(item))


class IllegalMove(Exception):
    def __init__(self, move: Move, rule: str) -> None:
        super().__init__(f"step {move.step}: {move.action.value} {move.item!r}: {rule}")
        self.move = move
        self.rule = rule


_MODEL_NAMES = {
    DecisionModel.STANDARD: "Standard",
    DecisionModel.LATE_ACCEPT: "LateAccept",
    DecisionModel.LATE_REJECT: "LateReject",
    DecisionModel.LATE_ACCEPT_REJECT: "LateAcceptThenReject",
}


class SolutionLedger:
    """Accepted / rejected / pending partition with a legality-checked log.

    With ``implicit_reject=True`` an undecided current item in a model that
    forces immediate decisions is rejected at `close_step` instead of
    raising.
    """

    def __init__(self, model: DecisionModel, kind: ItemKind, *, implicit_reject: bool = False) -> None:
        self.model = model
        self.kind = kind
        self.implicit_reject = implicit_reject
        self.accepted: set[Hashable] = set()
        self.rejected: set[Hashable] = set()
        self.pending: set[Hashable] = set()
        self.log: list[Move] = []
        self.step = -1
        self.current: list[Hashable] = []
        self.ever_accepted: set[Hashable] = set()
        self.finalized = False

    # -- views ---------------------------------------------------------------

    @property
    def revealed(self) -> set[Hashable]:
        return self.accepted | self.rejected | self.pending

    def status(self, item: Hashable) -> str:
        if item in self.accepted:
            return "S"
        if item in self.rejected:
            return "R"
        if item in self.pending:
            return "P"
        return "?"

    # -- transitions ---------------------------------------------------------

    def reveal(self, step: int, items: Iterable[Hashable]) -> None:
        """Start step `step`, revealing `items` as pending."""
        if self.finalized:
            raise IllegalMove(Move(step, Action.REVEAL), "ledger already finalized")
        if step <= self.step:
            raise IllegalMove(Move(step, Action.REVEAL), f"step {step} does not follow step {self.step}")
        if self.model.forces_decision and self.current and any(x in self.pending for x in self.current):
            raise IllegalMove(Move(step, Action.REVEAL), f"undecided item in {_MODEL_NAMES[self.model]} model")
        self.step = step
        self.current = []
        for x in items:
            if x in self.pending or x in self.accepted or x in self.rejected:
                raise IllegalMove(Move(step, Action.REVEAL, x), "item revealed twice")  # type: ignore[arg-type]
            self.pending.add(x)
            self.current.append(x)
            self.log.append(Move(step, Action.REVEAL, x))  # type: ignore[arg-type]

    def _check(self, move: Move) -> None:
        model, x, act = self.model, move.item, move.action
        name = _MODEL_NAMES[model]
        if self.finalized:
            raise IllegalMove(move, "ledger already finalized")
        if move.step != self.step:
            raise IllegalMove(move, f"move for step {move.step} issued during step {self.step}")
        if act in (Action.REVEAL, Action.FINALIZE):
            raise IllegalMove(move, "reserved action")
        if x not in self.pending and x not in self.accepted and x not in self.rejected:
            raise IllegalMove(move, "item not revealed")
        is_current = x in self.current
        if act is Action.ACCEPT or act is Action.REJECT:
            if not is_current:
                raise IllegalMove(move, "immediate decision on an item that is not current")
            if act is Action.REJECT and model.allows_late_accept:
                raise IllegalMove(move, f"immediate reject in {name} model (items stay pending)")
        elif act is Action.LATE_ACCEPT:
            if not model.allows_late_accept:
                raise IllegalMove(move, f"late accept in {name} model")
            if is_current:
                raise IllegalMove(move, "late accept of the current item (use accept)")
        elif act is Action.LATE_REJECT and not model.allows_late_reject:
            raise IllegalMove(move, f"late reject in {name} model")
        if act in (Action.ACCEPT, Action.REJECT, Action.LATE_ACCEPT):
            if x in self.rejected:
                raise IllegalMove(move, "re-accept after late reject" if act is not Action.REJECT else "item already rejected")
            if x in self.accepted:
                raise IllegalMove(move, "item already accepted")
        else:  # LATE_REJECT
            if x in self.rejected:
                raise IllegalMove(move, "item already rejected")
            if x not in self.accepted:
                raise IllegalMove(move, "late reject of an item that is not accepted")

    def apply(self, move: Move) -> None:
        self._check(move)
        x = move.item
        if move.action in (Action.ACCEPT, Action.LATE_ACCEPT):
            self.pending.discard(x)
            self.accepted.add(x)
            self.ever_accepted.add(x)
        elif move.action is Action.REJECT:
            self.pending.discard(x)
            self.rejected.add(x)
        else:
            self.accepted.discard(x)
            self.rejected.add(x)
        self.log.append(move)

    def apply_all(self, moves: Iterable[Move]) -> None:
        for mv in moves:
            self.apply(mv)

    def close_step(self) -> None:
        """End of the current step; enforces immediate decisions."""
        if not self.model.forces_decision:
            return
        for x in self.current:
            if x in self.pending:
                if self.implicit_reject:
                    self.apply(Move(self.step, Action.REJECT, x))  # type: ignore[arg-type]
                else:
                    raise IllegalMove(
                        Move(self.step, Action.REVEAL, x),  # type: ignore[arg-type]
                        f"undecided item in {_MODEL_NAMES[self.model]} model",
                    )

    def finalize(self) -> frozenset:
        """Close the ledger at end of input and return the final solution.

        Pending items stay in `pending` here; reports list them as unused.
        """
        if not self.finalized:
            self.close_step()
            self.log.append(Move(self.step + 1, Action.FINALIZE))
            self.finalized = True
        return frozenset(self.accepted)

    @property
    def unused(self) -> frozenset:
        return frozenset(self.pending)

    # -- replay ----------------------------------------------------------------

    @classmethod
    def replay(cls, model: DecisionModel, kind: ItemKind, log: Iterable[Move]) -> SolutionLedger:
        led = cls(model, kind)
        batch: list[Hashable] = []
        batch_step: Optional[int] = None

        def flush() -> None:
            nonlocal batch, batch_step
            if batch_step is not None:
                led.reveal(batch_step, batch)
            batch, batch_step = [], None

        for mv in log:
            if mv.action is Action.REVEAL:
                if batch_step is not None and batch_step != mv.step:
                    flush()
                if batch_step is None and led.step >= 0:
                    led.close_step()
                batch_step = mv.step
                batch.append(mv.item)  # type: ignore[arg-type]
                continue
            flush()
            if mv.action is Action.FINALIZE:
                led.finalize()
            else:
                led.apply(mv)
        flush()
        return led

    def copy(self) -> SolutionLedger:
        led = SolutionLedger(self.model, self.kind, implicit_reject=self.implicit_reject)
        led.accepted = set(self.accepted)
        led.rejected = set(self.rejected)
        led.pending = set(self.pending)
        led.log = list(self.log)
        led.step = self.step
        led.current = list(self.current)
        led.ever_accepted = set(self.ever_accepted)
        led.finalized = self.finalized
        return led

    def snapshot(self) -> tuple[frozenset, frozenset, frozenset]:
        return frozenset(self.accepted), frozenset(self.rejected), frozenset(self.pending)

    def log_jsonl(self) -> str:
        return "\n".join(m.to_json(self.kind) for m in self.log)

    def __repr__(self) -> str:
        return (
            f"SolutionLedger({self.model.value}, S={sorted(self.accepted)}, "
            f"R={sorted(self.rejected)}, P={sorted(self.pending)})"
        )
