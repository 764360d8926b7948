import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pizza.core import (
    Cutting,
    CuttingParseError,
    GameOverError,
    GameRecord,
    IllegalMoveError,
    Move,
    MoveKind,
    PizzaError,
    Player,
    Position,
    ProtocolViolationError,
    apply_move,
    characteristic_cycle,
    classify_move,
    legal_moves,
    parse_cutting_line,
    parse_cuttings,
    pizza_from_cycle,
    play_game,
)
from pizza.cuttings import random_cutting
from pizza.strategies import RandomStrategy, alice_parity


odd_cuttings = st.lists(st.integers(0, 9), min_size=1, max_size=25).filter(
    lambda xs: len(xs) % 2 == 1
)


# --- parsing -----------------------------------------------------------------


def test_parse_forms():
    assert parse_cutting_line("1, 2, 3").slices == (1, 2, 3)
    assert parse_cutting_line("1 2 3").slices == (1, 2, 3)
    assert parse_cutting_line("1/2 0.25 3").slices == (
        Fraction(1, 2),
        Fraction(1, 4),
        3,
    )
    # a lone multi-digit token is the compact digit form
    assert parse_cutting_line("002020030300404").n == 15
    assert parse_cutting_line("5").slices == (5,)


def test_parse_decimal_exact():
    c = parse_cutting_line("0.1")
    assert c.slices[0] == Fraction(1, 10)


def test_parse_rejects():
    with pytest.raises(CuttingParseError):
        parse_cutting_line("1, x, 3")
    with pytest.raises(CuttingParseError):
        parse_cutting_line("")
    with pytest.raises(CuttingParseError):
        parse_cutting_line("1, -2")


def test_parse_file_with_comments():
    text = "# fixture\n1,2\n\n002020030300404\n"
    cuttings = parse_cuttings(text)
    assert [c.n for c in cuttings] == [2, 15]


def test_parse_error_names_line():
    with pytest.raises(CuttingParseError) as exc:
        parse_cuttings("1,2\n1,zz\n")
    assert "line 2" in str(exc.value)


def test_cutting_invariants():
    with pytest.raises(PizzaError):
        Cutting(())
    with pytest.raises(PizzaError):
        Cutting((1, -1))
    c = Cutting.of(["1/2", 1])
    assert c.total == Fraction(3, 2)
    assert c.size(5) == c.size(5 % 2)


# --- characteristic cycle ----------------------------------------------------


def test_cycle_n5_unrolled():
    c = Cutting.of([10, 11, 12, 13, 14])  # stand-ins for a,b,c,d,e
    v = characteristic_cycle(c)
    assert v.elements == (10, 12, 14, 11, 13)


def test_cycle_single_nonzero():
    v = characteristic_cycle(Cutting.of([1, 0, 0, 0, 0]))
    assert v.elements == (1, 0, 0, 0, 0)


def test_cycle_15_slice_family():
    c = Cutting.of([0, 0, 1, 0, 1, 0, 0, Fraction(3, 2), 0, Fraction(3, 2), 0, 0, 2, 0, 2])
    v = characteristic_cycle(c)
    assert v.elements == (0, 1, 1, 0, 0, 0, 2, 2, 0, 0, 0, Fraction(3, 2), Fraction(3, 2), 0, 0)


def test_cycle_rejects_even():
    with pytest.raises(PizzaError):
        characteristic_cycle(Cutting.of([1, 2]))


def test_cycle_origin_map():
    c = random_cutting(9, 9, 1)
    v = characteristic_cycle(c)
    for k in range(9):
        assert v.elements[k] == c.slices[v.origin_map(k)]
        assert v.cycle_index_of(v.origin_map(k)) == k


def test_pizza_from_cycle_n5():
    p = pizza_from_cycle((10, 12, 14, 11, 13))
    assert p.slices == (10, 11, 12, 13, 14)


def test_pizza_from_cycle_fixed_point():
    p = pizza_from_cycle((1, 0, 0, 1, 0, 0, 1, 0, 0))
    assert p.slices == (1, 0, 0, 1, 0, 0, 1, 0, 0)


@settings(max_examples=200)
@given(odd_cuttings)
def test_cycle_round_trip(sizes):
    c = Cutting(tuple(sizes))
    v = characteristic_cycle(c)
    assert pizza_from_cycle(v).slices == c.slices
    assert v.total == c.total


def test_round_trip_battery():
    for seed in range(1000):
        c = random_cutting(2 * (seed % 13) + 1, 9, seed)
        assert pizza_from_cycle(characteristic_cycle(c)).slices == c.slices


# --- moves -------------------------------------------------------------------


def test_legal_moves_start():
    pos = Position.initial(5)
    assert legal_moves(pos) == {0, 1, 2, 3, 4}


def test_legal_moves_mid():
    pos = Position(n=9, start=3, length=4, last_taken_end="left")
    assert legal_moves(pos) == {3, 6}


def test_legal_moves_last():
    pos = Position(n=9, start=4, length=1, last_taken_end="left")
    assert legal_moves(pos) == {4}


def test_legal_moves_game_over():
    pos = Position(n=3, start=0, length=0, last_taken_end="left")
    with pytest.raises(GameOverError):
        legal_moves(pos)


def test_classify_turn2_both_shift():
    pos = apply_move(Position.initial(9), 4)
    assert pos.turn_number == 2
    assert classify_move(pos, 3) is MoveKind.SHIFT
    assert classify_move(pos, 5) is MoveKind.SHIFT


def test_classify_turn3():
    pos = Position.initial(9)
    pos = apply_move(pos, 4)
    pos = apply_move(pos, 5)
    assert classify_move(pos, 6) is MoveKind.SHIFT
    assert classify_move(pos, 3) is MoveKind.JUMP


def test_classify_last_turn_shift():
    pos = Position(n=3, start=2, length=1, last_taken_end="right")
    assert classify_move(pos, 2) is MoveKind.SHIFT


def test_classify_illegal():
    pos = apply_move(Position.initial(5), 0)
    with pytest.raises(IllegalMoveError):
        classify_move(pos, 2)


def test_apply_move_first():
    pos = apply_move(Position.initial(5), 2)
    assert (pos.start, pos.length, pos.turn_number) == (3, 4, 2)


def test_apply_move_ends():
    pos = apply_move(Position.initial(5), 2)
    left = apply_move(pos, 3)
    assert left.last_taken_end == "left" and left.start == 4
    right = apply_move(pos, 1)
    assert right.last_taken_end == "right" and right.start == 3


def test_apply_move_tracks_jumps():
    pos = Position.initial(9)
    for idx in (4, 5, 3):  # alice, bob shift, alice jump
        pos = apply_move(pos, idx)
    assert pos.jumps_by_alice == 1 and pos.jumps_by_bob == 0


@settings(max_examples=150)
@given(st.lists(st.integers(0, 9), min_size=1, max_size=16), st.data())
def test_random_playthrough_invariants(sizes, data):
    c = Cutting(tuple(sizes))
    n = c.n
    pos = Position.initial(n)
    taken: list[int] = []
    turn = 0
    while not pos.game_over:
        turn += 1
        legal = sorted(legal_moves(pos))
        if turn == 1:
            assert len(legal) == n
        elif turn == n:
            assert len(legal) == 1
        else:
            assert len(legal) == 2
        if 2 < turn < n:
            kinds = {classify_move(pos, i) for i in legal}
            assert kinds == {MoveKind.SHIFT, MoveKind.JUMP}
        idx = data.draw(st.sampled_from(legal))
        pos = apply_move(pos, idx)
        taken.append(idx)
        # taken indices always form one circular arc
        remaining = set(range(n)) - set(taken)
        assert len(taken) == turn
        if remaining:
            starts = [i for i in remaining if (i - 1) % n not in remaining]
            assert len(starts) == 1 or len(remaining) == n
    assert pos.turn_number == n + 1


# --- referee -----------------------------------------------------------------


def test_play_game_conservation():
    for seed in range(25):
        c = random_cutting(seed % 10 + 1, 9, seed)
        rec = play_game(c, RandomStrategy(seed), RandomStrategy(seed + 1))
        assert rec.alice_gain + rec.bob_gain == c.total
        assert len(rec.moves) == c.n


def test_play_game_single_slice():
    rec = play_game(Cutting.of([7]), RandomStrategy(0), RandomStrategy(1))
    assert rec.alice_gain == 7 and rec.bob_gain == 0


def test_play_game_parity_floor():
    for seed in range(20):
        c = random_cutting(2 * (seed % 6 + 1), 9, seed)
        rec = play_game(c, alice_parity(c), RandomStrategy(seed))
        assert rec.alice_gain >= Fraction(c.total, 2)


def test_play_game_protocol_violation():
    class Cheat:
        def next_move(self, record, pos):
            return (pos.left + 1) % pos.n if pos.start is not None else 0

    with pytest.raises(ProtocolViolationError) as exc:
        play_game(Cutting.of([1, 2, 3, 4]), RandomStrategy(0), Cheat())
    assert "turn 2" in str(exc.value)


def test_record_jump_count():
    c = Cutting.of([1, 2, 3, 4, 5])
    rec = GameRecord(c)
    rec.push(Move(1, Player.ALICE, 0, MoveKind.FIRST))
    rec.push(Move(2, Player.BOB, 4, MoveKind.SHIFT))
    rec.push(Move(3, Player.ALICE, 1, MoveKind.JUMP))
    assert rec.jump_count(Player.ALICE) == 1
    assert rec.alice_gain == 1 + 2
    rec.pop()
    assert rec.alice_gain == 1
