"""Exact game solving: optimal DP, jump-restricted DP, brute-force minimax,
and best-response certification of fixed strategies.

All values are exact. Internally slice sizes are scaled to integers by the
common denominator, so the inner loops run on machine ints where possible.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .core import (
    Cutting,
    GameRecord,
    Move,
    PizzaError,
    Player,
    Position,
    ProtocolViolationError,
    Rat,
    apply_move,
    classify_move,
    format_rational,
    legal_moves,
    play_game,
    shift_end,
)

LEFT, RIGHT, EITHER = 0, 1, 2
_POLICY_NAMES = {LEFT: "left", RIGHT: "right", EITHER: "either"}

_INT64_LIMIT = 1 << 62


def _scaled_sizes(cutting: Cutting) -> tuple[list[int], int]:
    """Slice sizes as integers plus the common denominator."""
    denom = math.lcm(*(Fraction(s).denominator for s in cutting.slices))
    nums = [int(Fraction(s) * denom) for s in cutting.slices]
    return nums, denom


def _as_rat(raw: int, denom: int) -> Rat:
    if denom == 1:
        return raw
    f = Fraction(raw, denom)
    return int(f) if f.denominator == 1 else f


class ValueTable:
    """Values v(X) and optimal ends for every arc of the pizza.

    v(empty) = 0, v(single slice) = its size, and for longer arcs
    v(X) = |X| - min(v(X minus left end), v(X minus right end)), the best
    gain of the player to move. Arcs are keyed by (start, length); together
    with the empty and initial positions that is n^2 - n + 2 states.
    """

    def __init__(self, cutting: Cutting):
        self.cutting = cutting
        n = cutting.n
        nums, self._denom = _scaled_sizes(cutting)
        total = sum(nums)
        small = total < _INT64_LIMIT

        prefix = [0] * (2 * n + 1)
        for i in range(2 * n):
            prefix[i + 1] = prefix[i] + nums[i % n]
        self._prefix = prefix

        # values[length][start] for lengths 1 .. n-1
        values: list = [None] * n
        policy: list = [None] * n
        if n > 1:
            row = array("q", nums) if small else list(nums)
            values[1] = row
            policy[1] = bytearray(n)
        for length in range(2, n):
            cur = array("q", bytes(8 * n)) if small else [0] * n
            curp = bytearray(n)
            prev = values[length - 1]
            for s in range(n):
                vl = prev[s + 1 - n] if s + 1 >= n else prev[s + 1]
                vr = prev[s]
                arc = prefix[s + length] - prefix[s]
                if vl < vr:
                    cur[s] = arc - vl
                    curp[s] = LEFT
                elif vr < vl:
                    cur[s] = arc - vr
                    curp[s] = RIGHT
                else:
                    cur[s] = arc - vl
                    curp[s] = EITHER
            values[length] = cur
            policy[length] = curp
        self._values = values
        self._policy = policy

        if n == 1:
            self._alice_raw = nums[0]
            self._best_firsts = [0]
        else:
            last = values[n - 1]
            best = min(last)
            self._alice_raw = total - best
            # the arc (s, n-1) remains after a first move on slice s-1
            self._best_firsts = sorted((s - 1) % n for s in range(n) if last[s] == best)

    @property
    def n(self) -> int:
        return self.cutting.n

    def _frac(self, raw: int) -> Rat:
        return _as_rat(raw, self._denom)

    def value(self, start: int, length: int) -> Rat:
        """Best gain of the player to move on the arc (start, length)."""
        if length == 0:
            return 0
        if not 1 <= length <= self.n - 1:
            raise PizzaError(f"no arc of length {length} on {self.n} slices")
        return self._frac(self._values[length][start % self.n])

    def policy(self, start: int, length: int) -> str:
        """'left', 'right' or 'either': which end the mover should take."""
        if length == 1:
            return "either"  # the two ends coincide
        return _POLICY_NAMES[self._policy[length][start % self.n]]

    @property
    def alice_value(self) -> Rat:
        return self._frac(self._alice_raw)

    @property
    def bob_value(self) -> Rat:
        return self.cutting.total - self.alice_value

    @property
    def best_first_moves(self) -> list[int]:
        return list(self._best_firsts)

    def move_value(self, pos: Position, index: int) -> Rat:
        """Total the mover ends with after taking ``index`` and optimal play."""
        n = self.n
        if pos.start is None:
            return self.cutting.total - self.value((index + 1) % n, n - 1)
        arc_total = self._frac(self._prefix[pos.start + pos.length] - self._prefix[pos.start])
        if pos.length == 1:
            if index != pos.left:
                raise PizzaError(f"slice {index} is not an end of the arc")
            return arc_total
        if index == pos.left:
            return arc_total - self.value((pos.start + 1) % n, pos.length - 1)
        if index == pos.right:
            return arc_total - self.value(pos.start, pos.length - 1)
        raise PizzaError(f"slice {index} is not an end of the arc")

    def position_count(self) -> int:
        return self.n * (self.n - 1) + 2

    def to_json_dict(self, include_arcs: bool = True) -> dict:
        out = {
            "n": self.n,
            "total": format_rational(self.cutting.total),
            "alice_value": format_rational(self.alice_value),
            "bob_value": format_rational(self.bob_value),
            "best_first_moves": self.best_first_moves,
            "positions": self.position_count(),
        }
        if include_arcs:
            values = {}
            policy = {}
            for length in range(1, self.n):
                for s in range(self.n):
                    key = f"{s},{length}"
                    values[key] = format_rational(self.value(s, length))
                    policy[key] = self.policy(s, length)
            out["values"] = values
            out["policy"] = policy
        return out


def solve_optimal(cutting: Cutting) -> ValueTable:
    """Fill the whole table of n^2 - n + 2 positions, O(n^2)."""
    return ValueTable(cutting)


def solve_jump_limited(cutting: Cutting, budget: int, side: Player = Player.ALICE) -> Rat:
    """Value for ``side`` when ``side`` may jump at most ``budget`` times.

    The opponent is unrestricted; turns 1 and 2 are never charged. States
    are (arc, end taken last, budget left), streamed by arc length so
    memory stays O(n * budget). Time O(n^2 * budget).
    """
    if budget < 0:
        raise PizzaError("jump budget must be nonnegative")
    n = cutting.n
    nums, denom = _scaled_sizes(cutting)
    total = sum(nums)
    if n == 1:
        return _as_rat(total if side is Player.ALICE else 0, denom)

    jmax = min(budget, max(n // 2 - 1, 0))
    # layer[j][last][start]: side's gain from this arc on; last 0 = the
    # previous take was on the left side of the arc, 1 = right side.
    prev = [[[0] * n, [0] * n] for _ in range(jmax + 1)]

    for length in range(1, n - 1):
        taken = n - length
        mover = Player.ALICE if taken % 2 == 0 else Player.BOB
        mine = mover is side
        cur = [[[0] * n, [0] * n] for _ in range(jmax + 1)]
        for j in range(jmax + 1):
            for last in (0, 1):
                row = cur[j][last]
                if length == 1:
                    # final turn, always a shift
                    for s in range(n):
                        row[s] = nums[s] if mine else 0
                    continue
                pj = prev[j]
                for s in range(n):
                    r = s + length - 1
                    if r >= n:
                        r -= n
                    s1 = s + 1 if s + 1 < n else 0
                    left_val = (nums[s] if mine else 0) + pj[0][s1]
                    right_val = (nums[r] if mine else 0) + pj[1][s]
                    if not mine:
                        row[s] = min(left_val, right_val)
                    elif last == 0:
                        best = left_val  # shift
                        if j > 0:
                            jump = nums[r] + prev[j - 1][1][s]
                            if jump > best:
                                best = jump
                        row[s] = best
                    else:
                        best = right_val  # shift
                        if j > 0:
                            jump = nums[s] + prev[j - 1][0][s1]
                            if jump > best:
                                best = jump
                        row[s] = best
        prev = cur

    # prev now holds arcs of length n-2 (turn 3 to move). Combine turn 1
    # (free choice) and turn 2 (both options are shifts, never charged).
    best_game = None
    for x in range(n):
        s_after = (x + 1) % n
        take_left_next = (s_after + 1) % n
        r_after = (s_after + n - 2) % n
        if side is Player.ALICE:
            future_if_bob_left = prev[jmax][0][take_left_next]
            future_if_bob_right = prev[jmax][1][s_after]
            cand = nums[x] + min(future_if_bob_left, future_if_bob_right)
            best_game = cand if best_game is None else max(best_game, cand)
        else:
            bob_left = nums[s_after] + prev[jmax][0][take_left_next]
            bob_right = nums[r_after] + prev[jmax][1][s_after]
            cand = max(bob_left, bob_right)
            best_game = cand if best_game is None else min(best_game, cand)
    assert best_game is not None
    return _as_rat(best_game, denom)


def solve_alice_jump_limited(cutting: Cutting, budget: int) -> Rat:
    """Alice's value when she may jump at most ``budget`` times."""
    return solve_jump_limited(cutting, budget, Player.ALICE)


def solve_bob_jump_limited(cutting: Cutting, budget: int) -> Rat:
    """Bob's value when he may jump at most ``budget`` times."""
    return solve_jump_limited(cutting, budget, Player.BOB)


_BRUTE_FORCE_LIMIT = 21


def brute_force_value(cutting: Cutting) -> Rat:
    """Alice's optimal gain by plain minimax over the explicit game tree.

    Walks referee positions move by move with no memoization; the
    independence oracle for solve_optimal. Refuses n > 21.
    """
    if cutting.n > _BRUTE_FORCE_LIMIT:
        raise PizzaError(f"brute force capped at n = {_BRUTE_FORCE_LIMIT}")

    def walk(pos: Position, alice_gain: Rat) -> Rat:
        if pos.game_over:
            return alice_gain
        mover = pos.to_move
        best = None
        for idx in sorted(legal_moves(pos)):
            gain = alice_gain + (cutting.size(idx) if mover is Player.ALICE else 0)
            val = walk(apply_move(pos, idx), gain)
            if best is None:
                best = val
            elif mover is Player.ALICE:
                best = max(best, val)
            else:
                best = min(best, val)
        assert best is not None
        return best

    return walk(Position.initial(cutting.n), 0)


def enumerate_games(
    cutting: Cutting,
    strategy,
    side: Player,
    *,
    prefix: list[int] | None = None,
) -> Iterator[GameRecord]:
    """All complete games where ``side`` plays ``strategy`` and the opponent
    tries every choice. ``prefix`` forces the first moves (either side)."""
    record = GameRecord(cutting)
    forced = list(prefix or [])

    def step(pos: Position) -> Iterator[GameRecord]:
        if pos.game_over:
            yield record.snapshot()
            return
        mover = pos.to_move
        turn = pos.turn_number
        if turn <= len(forced):
            choices = [forced[turn - 1]]
        elif mover is side:
            idx = strategy.next_move(record, pos)
            legal = legal_moves(pos)
            if idx not in legal:
                raise ProtocolViolationError(turn, idx, legal)
            choices = [idx]
        else:
            choices = sorted(legal_moves(pos))
        for idx in choices:
            record.push(Move(turn, mover, idx, classify_move(pos, idx)))
            yield from step(apply_move(pos, idx))
            record.pop()

    yield from step(Position.initial(cutting.n))


def best_response_gain(
    cutting: Cutting,
    strategy,
    side: Player,
    *,
    prefix: list[int] | None = None,
) -> Rat:
    """Worst-case gain of ``side`` playing ``strategy`` against an opponent
    who explores every reply (including starving declared jump budgets)."""
    worst = None
    for rec in enumerate_games(cutting, strategy, side, prefix=prefix):
        g = rec.gain_of(side)
        if worst is None or g < worst:
            worst = g
    assert worst is not None
    return worst


def max_jumps_used(
    cutting: Cutting,
    strategy,
    side: Player,
    *,
    prefix: list[int] | None = None,
) -> int:
    """Most jumps ``side`` makes over all opponent replies."""
    return max(
        rec.jump_count(side)
        for rec in enumerate_games(cutting, strategy, side, prefix=prefix)
    )


@dataclass
class _PolicyPlayer:
    """Both-sides engine following a value table, shift end on ties."""

    table: ValueTable
    name: str = "optimal"
    max_jumps: int | None = None
    gain_bound: Rat | None = None

    def next_move(self, record: GameRecord, pos: Position) -> int:
        if pos.start is None:
            return self.table.best_first_moves[0]
        if pos.length == 1:
            return pos.left
        choice = self.table.policy(pos.start, pos.length)
        if choice == "left":
            return pos.left
        if choice == "right":
            return pos.right
        if pos.turn_number == 2:
            return pos.left
        return shift_end(pos)


def optimal_player(table: ValueTable) -> _PolicyPlayer:
    return _PolicyPlayer(table)


def optimal_trace(cutting: Cutting) -> GameRecord:
    """The policy-vs-policy game (ties shift-first, first move leftmost)."""
    table = solve_optimal(cutting)
    player = _PolicyPlayer(table)
    return play_game(cutting, player, player)


def optimal_jump_count(cutting: Cutting) -> int:
    """Alice's jumps when both sides follow the stored policy, ties shift-first."""
    if cutting.n < 2:
        return 0
    return optimal_trace(cutting).jump_count(Player.ALICE)


def forced_order_trace(cutting: Cutting) -> GameRecord:
    """Optimal play with value ties broken toward the largest slice.

    On permutation-forcing cuttings the value can tie between plays that
    swap the order of a player's takes without changing anyone's final
    slices; preferring the biggest available optimal slice pins the trace
    to the intended take order.
    """
    table = solve_optimal(cutting)
    pos = Position.initial(cutting.n)
    record = GameRecord(cutting)
    while not pos.game_over:
        legal = sorted(legal_moves(pos))
        values = {i: table.move_value(pos, i) for i in legal}
        best = max(values.values())
        idx = max(
            (i for i in legal if values[i] == best),
            key=lambda i: (cutting.size(i), -i),
        )
        record.push(Move(pos.turn_number, pos.to_move, idx, classify_move(pos, idx)))
        pos = apply_move(pos, idx)
    return record


def bellman_check(table: ValueTable) -> bool:
    """Recompute v(X) = |X| - min(...) for every arc directly."""
    n = table.n
    c = table.cutting
    for length in range(1, n):
        for s in range(n):
            arc_total = sum(c.size(s + i) for i in range(length))
            if length == 1:
                want = arc_total
            else:
                want = arc_total - min(
                    table.value((s + 1) % n, length - 1), table.value(s, length - 1)
                )
            if table.value(s, length) != want:
                return False
    return True
