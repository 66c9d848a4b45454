import pytest
from hypothesis import given, settings, strategies as st

from lateops.ledger import (
    Action,
    DecisionModel,
    IllegalMove,
    ItemKind,
    Move,
    SolutionLedger,
    move_from_json,
)

STD, LA, LR, LAR = (DecisionModel.STANDARD, DecisionModel.LATE_ACCEPT,
                    DecisionModel.LATE_REJECT, DecisionModel.LATE_ACCEPT_REJECT)


def acc(step, x):
    return Move(step, Action.ACCEPT, x)


def late_acc(step, x):
    return Move(step, Action.LATE_ACCEPT, x)


def late_rej(step, x):
    return Move(step, Action.LATE_REJECT, x)


def check_partition(led):
    assert not led.accepted & led.rejected
    assert not led.accepted & led.pending
    assert not led.rejected & led.pending


@pytest.mark.parametrize("model", list(DecisionModel))
@pytest.mark.parametrize("kind", list(ItemKind))
def test_new_ledger_is_empty(model, kind):
    led = SolutionLedger(model, kind)
    assert (len(led.accepted), len(led.rejected), len(led.pending), led.log) == (0, 0, 0, [])


def test_model_parse_aliases():
    assert DecisionModel.parse("late-accept") is LA
    assert DecisionModel.parse("LAR") is LAR
    with pytest.raises(ValueError):
        DecisionModel.parse("lazy")


def test_late_reject_then_late_accept_is_illegal():
    led = SolutionLedger(LR, ItemKind.VERTEX)
    led.reveal(0, [0])
    led.apply(acc(0, 0))
    led.close_step()
    led.reveal(1, [1])
    led.apply(late_rej(1, 0))
    with pytest.raises(IllegalMove) as exc:
        led.apply(late_acc(1, 0))
    assert exc.value.rule == "late accept in LateReject model"


def test_lar_pending_then_late_accept_then_late_reject():
    led = SolutionLedger(LAR, ItemKind.VERTEX)
    led.reveal(0, [0])
    led.reveal(1, [1])
    led.apply(late_acc(1, 0))
    led.reveal(2, [2])
    led.apply(late_rej(2, 0))
    assert 0 in led.rejected
    with pytest.raises(IllegalMove, match="re-accept after late reject"):
        led.apply(late_acc(2, 0))


def test_standard_undecided_item():
    led = SolutionLedger(STD, ItemKind.VERTEX)
    led.reveal(0, [0])
    with pytest.raises(IllegalMove, match="undecided item in Standard model"):
        led.close_step()


def test_standard_next_reveal_without_decision():
    led = SolutionLedger(STD, ItemKind.VERTEX)
    led.reveal(0, [0])
    with pytest.raises(IllegalMove, match="undecided item"):
        led.reveal(1, [1])


def test_implicit_reject_mode():
    led = SolutionLedger(LR, ItemKind.VERTEX, implicit_reject=True)
    led.reveal(0, [0])
    led.close_step()
    assert led.rejected == {0}
    assert led.log[-1] == Move(0, Action.REJECT, 0)


@pytest.mark.parametrize("model,action,rule", [
    (STD, Action.LATE_ACCEPT, "late accept in Standard model"),
    (STD, Action.LATE_REJECT, "late reject in Standard model"),
    (LA, Action.LATE_REJECT, "late reject in LateAccept model"),
])
def test_model_forbids_late_moves(model, action, rule):
    led = SolutionLedger(model, ItemKind.VERTEX)
    led.reveal(0, [0])
    led.apply(acc(0, 0))
    led.close_step()
    led.reveal(1, [1])
    with pytest.raises(IllegalMove) as exc:
        led.apply(Move(1, action, 0))
    assert exc.value.rule == rule


def test_immediate_reject_forbidden_when_late_accept_allowed():
    led = SolutionLedger(LA, ItemKind.VERTEX)
    led.reveal(0, [0])
    with pytest.raises(IllegalMove, match="immediate reject"):
        led.apply(Move(0, Action.REJECT, 0))


def test_decisions_on_unrevealed_or_past_items():
    led = SolutionLedger(LAR, ItemKind.VERTEX)
    led.reveal(0, [0])
    with pytest.raises(IllegalMove, match="not revealed"):
        led.apply(late_acc(0, 5))
    led.reveal(1, [1])
    with pytest.raises(IllegalMove, match="not current"):
        led.apply(acc(1, 0))
    with pytest.raises(IllegalMove, match="issued during step"):
        led.apply(acc(0, 1))


def test_finalize_keeps_pending_as_unused():
    led = SolutionLedger(LA, ItemKind.VERTEX)
    for s in range(4):
        led.reveal(s, [s])
    led.apply(acc(3, 3))
    led.apply(late_acc(3, 1))
    assert led.finalize() == {1, 3}
    assert led.unused == {0, 2}
    assert led.log[-1].action is Action.FINALIZE


def test_finalize_empty_and_lar():
    assert SolutionLedger(STD, ItemKind.EDGE).finalize() == frozenset()
    led = SolutionLedger(LAR, ItemKind.VERTEX)
    led.reveal(0, ["a"])
    led.reveal(1, ["b"])
    led.apply(late_acc(1, "a"))
    led.apply(acc(1, "b"))
    assert led.finalize() == {"a", "b"}


def test_finalized_ledger_refuses_moves():
    led = SolutionLedger(LAR, ItemKind.VERTEX)
    led.reveal(0, [0])
    led.finalize()
    with pytest.raises(IllegalMove, match="finalized"):
        led.reveal(1, [1])


def test_json_lines():
    led = SolutionLedger(LR, ItemKind.EDGE)
    led.reveal(0, [(0, 1)])
    led.apply(acc(0, (0, 1)))
    led.close_step()
    led.reveal(1, [(1, 2)])
    led.apply(late_rej(1, (0, 1)))
    led.apply(acc(1, (1, 2)))
    lines = led.log_jsonl().splitlines()
    assert lines[3] == '{"step":1,"action":"lateReject","item":"e0-1"}'
    assert [move_from_json(x) for x in lines] == led.log


# -- fuzzing: random legal and illegal moves -------------------------------------------

def _candidate_moves(led, step, rng):
    items = sorted(led.revealed)
    moves = []
    for x in items:
        for act in (Action.ACCEPT, Action.REJECT, Action.LATE_ACCEPT, Action.LATE_REJECT):
            moves.append(Move(step, act, x))
    rng.shuffle(moves)
    return moves[: rng.randint(0, 4)]


def fuzz_ledger(model, steps, rng):
    """Drive a ledger with random moves, keeping legal ones; returns the
    ledger and the number of moves tried."""
    led = SolutionLedger(model, ItemKind.VERTEX, implicit_reject=True)
    tried = 0
    prev = led.snapshot()
    for step in range(steps):
        led.reveal(step, [step])
        for mv in _candidate_moves(led, step, rng):
            tried += 1
            try:
                led.apply(mv)
            except IllegalMove:
                pass
            check_partition(led)
            s, r, _ = led.snapshot()
            assert prev[1] <= r
            if model in (STD, LA):
                assert prev[0] <= s
            prev = led.snapshot()
        led.close_step()
        check_partition(led)
        assert led.revealed == set(range(step + 1))
    return led, tried


@settings(max_examples=80)
@given(st.sampled_from(list(DecisionModel)), st.integers(0, 2**32), st.integers(1, 25))
def test_fuzz_partition_monotonicity_and_replay(model, seed, steps):
    import random

    led, _ = fuzz_ledger(model, steps, random.Random(seed))
    led.finalize()
    again = SolutionLedger.replay(model, ItemKind.VERTEX, led.log)
    assert again.snapshot() == led.snapshot()
    assert again.log == led.log


@settings(max_examples=40)
@given(st.integers(0, 2**32))
def test_lar_never_leaves_rejected(seed):
    import random

    rng = random.Random(seed)
    led = SolutionLedger(LAR, ItemKind.VERTEX)
    ever_rejected = set()
    for step in range(15):
        led.reveal(step, [step])
        for mv in _candidate_moves(led, step, rng):
            try:
                led.apply(mv)
            except IllegalMove:
                pass
            ever_rejected |= led.rejected
            assert ever_rejected == led.rejected
