"""Game model for the circular pizza-sharing game.

A pizza is a circular sequence of nonnegative rational slice sizes. Alice
takes any slice first; afterwards a slice is takeable iff it neighbors an
already taken slice, so the taken slices always form one circular arc and
every later turn picks one of the two ends of the remaining arc. A turn is
a shift when it takes a neighbor of the slice taken on the previous turn,
otherwise a jump.

All arithmetic is exact: slice sizes are Python ints or fractions.Fraction,
never floats.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Rat = int | Fraction


class PizzaError(Exception):
    """Base class for domain errors."""


class CuttingParseError(PizzaError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class IllegalMoveError(PizzaError):
    pass


class GameOverError(PizzaError):
    pass


class ProtocolViolationError(PizzaError):
    """A strategy returned an illegal move."""

    def __init__(self, turn: int, index: int, legal: set[int]):
        super().__init__(
            f"turn {turn}: strategy chose slice {index}, legal moves are {sorted(legal)}"
        )
        self.turn = turn
        self.index = index
        self.legal = legal


def as_rational(value: Rat | str) -> Rat:
    """Coerce a size to an exact rational; ints stay ints."""
    if isinstance(value, bool):
        raise CuttingParseError(f"not a slice size: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, str):
        try:
            f = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise CuttingParseError(f"not a rational: {value!r}") from exc
        return int(f) if f.denominator == 1 else f
    raise CuttingParseError(f"not a slice size: {value!r}")


def format_rational(value: Rat) -> str:
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class Cutting:
    """A pizza: circular sequence of exact nonnegative slice sizes."""

    slices: tuple[Rat, ...]

    def __post_init__(self):
        if len(self.slices) == 0:
            raise PizzaError("a cutting needs at least one slice")
        norm = tuple(as_rational(s) for s in self.slices)
        for s in norm:
            if s < 0:
                raise PizzaError(f"negative slice size {s}")
        object.__setattr__(self, "slices", norm)

    @property
    def n(self) -> int:
        return len(self.slices)

    @property
    def total(self) -> Rat:
        return sum(self.slices)

    def size(self, index: int) -> Rat:
        return self.slices[index % self.n]

    def __iter__(self) -> Iterator[Rat]:
        return iter(self.slices)

    def __str__(self) -> str:
        return ",".join(format_rational(s) for s in self.slices)

    @staticmethod
    def of(values: Iterable[Rat | str]) -> "Cutting":
        return Cutting(tuple(as_rational(v) for v in values))

    @staticmethod
    def from_digits(digits: str) -> "Cutting":
        """Build from a compact digit string like '002020030300404'."""
        if not digits or not digits.isdigit():
            raise CuttingParseError(f"not a digit string: {digits!r}")
        return Cutting(tuple(int(ch) for ch in digits))


_TOKEN_SPLIT = re.compile(r"[,\s]+")


def parse_cutting_line(text: str, line_no: int = 1) -> Cutting:
    """Parse one cutting: sizes separated by commas/whitespace, each an
    integer, a fraction 'a/b', or a decimal (read exactly). A single token
    of two or more digits is read as a digit string, one slice per digit."""
    stripped = text.strip().strip(",")
    if not stripped or stripped.startswith("#"):
        raise CuttingParseError("empty cutting", line_no)
    tokens = [t for t in _TOKEN_SPLIT.split(stripped) if t]
    if len(tokens) == 1 and tokens[0].isdigit() and len(tokens[0]) >= 2:
        return Cutting.from_digits(tokens[0])
    slices = []
    for tok in tokens:
        try:
            slices.append(as_rational(tok))
        except CuttingParseError as exc:
            col = text.index(tok) + 1
            raise CuttingParseError(f"bad slice size {tok!r}", line_no, col) from exc
        if slices[-1] < 0:
            col = text.index(tok) + 1
            raise CuttingParseError(f"negative slice size {tok!r}", line_no, col)
    return Cutting(tuple(slices))


def parse_cuttings(text: str) -> list[Cutting]:
    """Parse a cutting file: one cutting per line, '#' comments allowed."""
    out = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append(parse_cutting_line(line, line_no))
    return out


@dataclass(frozen=True)
class CharacteristicCycle:
    """Reindexing of an odd cutting: cycle element k holds pizza slice 2k mod n.

    Consecutive cycle elements sit two apart on the pizza, so the slices a
    player collects by shifting form arcs of the cycle.
    """

    elements: tuple[Rat, ...]

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def total(self) -> Rat:
        return sum(self.elements)

    def origin_map(self, cycle_index: int) -> int:
        """Pizza index of cycle element ``cycle_index``."""
        return (2 * cycle_index) % self.n

    def cycle_index_of(self, pizza_index: int) -> int:
        # 2 * (n+1)//2 == n+1 == 1 (mod n), so (n+1)//2 inverts 2 mod n.
        return (pizza_index * ((self.n + 1) // 2)) % self.n


def characteristic_cycle(p: Cutting) -> CharacteristicCycle:
    if p.n % 2 == 0:
        raise PizzaError("characteristic cycle is defined only for an odd slice count")
    # element k holds slice 2k mod n: even pizza indices first, then odd ones
    return CharacteristicCycle(p.slices[0::2] + p.slices[1::2])


def pizza_from_cycle(v: CharacteristicCycle | Sequence[Rat]) -> Cutting:
    """Inverse of characteristic_cycle."""
    elems = v.elements if isinstance(v, CharacteristicCycle) else tuple(v)
    n = len(elems)
    if n % 2 == 0:
        raise PizzaError("characteristic cycle is defined only for an odd slice count")
    half = (n + 1) // 2
    slices: list[Rat] = [0] * n
    slices[0::2] = elems[:half]
    slices[1::2] = elems[half:]
    return Cutting(tuple(slices))


class Player(Enum):
    ALICE = "alice"
    BOB = "bob"

    @property
    def other(self) -> "Player":
        return Player.BOB if self is Player.ALICE else Player.ALICE


class MoveKind(Enum):
    FIRST = "first"
    SHIFT = "shift"
    JUMP = "jump"


@dataclass(frozen=True)
class Position:
    """Remaining arc of the pizza plus enough history to classify moves.

    ``start`` is None only for the distinguished initial position (nothing
    taken yet). ``last_taken_end`` records which end of the previous
    remaining arc was removed: None before turn 3.
    """

    n: int
    start: int | None
    length: int
    last_taken_end: str | None = None  # "left" | "right" | None
    jumps_by_alice: int = 0
    jumps_by_bob: int = 0

    @property
    def turn_number(self) -> int:
        return self.n - self.length + 1

    @property
    def to_move(self) -> Player:
        return Player.ALICE if self.turn_number % 2 == 1 else Player.BOB

    @property
    def game_over(self) -> bool:
        return self.length == 0

    @property
    def left(self) -> int:
        assert self.start is not None
        return self.start

    @property
    def right(self) -> int:
        assert self.start is not None
        return (self.start + self.length - 1) % self.n

    def remaining_indices(self) -> list[int]:
        if self.start is None:
            return list(range(self.n))
        return [(self.start + i) % self.n for i in range(self.length)]

    @staticmethod
    def initial(n: int) -> "Position":
        return Position(n=n, start=None, length=n)


def legal_moves(pos: Position) -> set[int]:
    if pos.game_over:
        raise GameOverError("no moves in a finished game")
    if pos.start is None:
        return set(range(pos.n))
    if pos.length == 1:
        return {pos.left}
    return {pos.left, pos.right}


def shift_end(pos: Position) -> int:
    """The end of the remaining arc adjacent to the previously taken slice.

    Well defined from turn 3 on (turn 2 is a shift either way)."""
    if pos.last_taken_end == "left":
        return pos.left
    if pos.last_taken_end == "right":
        return pos.right
    raise PizzaError("shift end undefined before turn 3")


def classify_move(pos: Position, index: int) -> MoveKind:
    if index not in legal_moves(pos):
        raise IllegalMoveError(
            f"turn {pos.turn_number}: slice {index} not takeable"
        )
    if pos.turn_number == 1:
        return MoveKind.FIRST
    if pos.turn_number == 2 or pos.length == 1:
        return MoveKind.SHIFT
    return MoveKind.SHIFT if index == shift_end(pos) else MoveKind.JUMP


def apply_move(pos: Position, index: int) -> Position:
    kind = classify_move(pos, index)
    jumped = 1 if kind is MoveKind.JUMP else 0
    mover = pos.to_move
    ja = pos.jumps_by_alice + (jumped if mover is Player.ALICE else 0)
    jb = pos.jumps_by_bob + (jumped if mover is Player.BOB else 0)
    if pos.start is None:
        return Position(pos.n, (index + 1) % pos.n, pos.n - 1, None, ja, jb)
    if index == pos.left:
        return Position(pos.n, (pos.start + 1) % pos.n, pos.length - 1, "left", ja, jb)
    return Position(pos.n, pos.start, pos.length - 1, "right", ja, jb)


@dataclass(frozen=True)
class Move:
    turn: int
    player: Player
    index: int
    kind: MoveKind


@dataclass
class GameRecord:
    """Full record of a (possibly unfinished) game."""

    cutting: Cutting
    moves: list[Move] = field(default_factory=list)
    alice_gain: Rat = 0
    bob_gain: Rat = 0

    @property
    def last_move(self) -> Move | None:
        return self.moves[-1] if self.moves else None

    def gain_of(self, player: Player) -> Rat:
        return self.alice_gain if player is Player.ALICE else self.bob_gain

    def jump_count(self, player: Player) -> int:
        return sum(
            1 for m in self.moves if m.player is player and m.kind is MoveKind.JUMP
        )

    def push(self, move: Move) -> None:
        self.moves.append(move)
        size = self.cutting.size(move.index)
        if move.player is Player.ALICE:
            self.alice_gain += size
        else:
            self.bob_gain += size

    def pop(self) -> Move:
        move = self.moves.pop()
        size = self.cutting.size(move.index)
        if move.player is Player.ALICE:
            self.alice_gain -= size
        else:
            self.bob_gain -= size
        return move

    def snapshot(self) -> "GameRecord":
        return GameRecord(self.cutting, list(self.moves), self.alice_gain, self.bob_gain)


def play_game(cutting: Cutting, alice, bob) -> GameRecord:
    """Referee: run two strategies against each other to the end.

    Raises ProtocolViolationError when a strategy returns an illegal move.
    """
    pos = Position.initial(cutting.n)
    record = GameRecord(cutting)
    while not pos.game_over:
        mover = pos.to_move
        strategy = alice if mover is Player.ALICE else bob
        index = strategy.next_move(record, pos)
        legal = legal_moves(pos)
        if index not in legal:
            raise ProtocolViolationError(pos.turn_number, index, legal)
        kind = classify_move(pos, index)
        record.push(Move(pos.turn_number, mover, index, kind))
        pos = apply_move(pos, index)
    assert record.alice_gain + record.bob_gain == cutting.total
    return record
