"""Deterministic move generators with certified gain bounds.

Alice's strategies here are plans of a common shape: a precomputed first
move, then a reactive rule driven only by the current position and the
opponent's last move. The plan fields are

- ``stay``: while she has not jumped, shift as long as the shift stays
  inside this slice set, otherwise take the other end (her jump);
- ``trigger``: once the earlier stage is done, jump at her first turn after
  the opponent takes one of these slices, then shift forever.

Every "any slice works" freedom is resolved to the leftmost qualifying
index so plans are reproducible. Declared gain bounds are exact rationals
and the test suite certifies them by exhaustive best-response search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .analysis import (
    PotentialTooHighError,
    SixArcPartition,
    find_minimal_triple,
    median_index,
    potential_table,
)
from .core import (
    Cutting,
    GameRecord,
    PizzaError,
    Player,
    Position,
    Rat,
    characteristic_cycle,
    legal_moves,
    shift_end,
)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


class Strategy:
    """A named deterministic move generator for one side."""

    name: str = "strategy"
    side: str = "alice"  # "alice" | "bob" | "both"
    max_jumps: int | None = None
    gain_bound: Rat | None = None

    def next_move(self, record: GameRecord, pos: Position) -> int:
        raise NotImplementedError


class PlanStrategy(Strategy):
    def __init__(
        self,
        name: str,
        first: int,
        *,
        max_jumps: int,
        gain_bound: Rat | None,
        stay: frozenset[int] | None = None,
        trigger: frozenset[int] | None = None,
        partition: SixArcPartition | None = None,
        notes: dict | None = None,
    ):
        self.name = name
        self.side = "alice"
        self.first = first
        self.max_jumps = max_jumps
        self.gain_bound = gain_bound
        self.stay = stay
        self.trigger = trigger
        self.partition = partition
        self.notes = notes or {}

    def next_move(self, record: GameRecord, pos: Position) -> int:
        if pos.start is None:
            return self.first
        if pos.length == 1 or pos.turn_number == 2:
            return pos.left
        se = shift_end(pos)
        other = pos.right if se == pos.left else pos.left
        jumps = pos.jumps_by_alice
        if self.stay is not None and jumps == 0:
            return se if se in self.stay else other
        if self.trigger is not None and jumps == (1 if self.stay is not None else 0):
            last = record.last_move
            if last is not None and last.index in self.trigger:
                return other
        return se

    def __repr__(self):
        return f"<{self.name} first={self.first} bound={self.gain_bound}>"


class BobClassStrategy(Strategy):
    """Bob takes the end slice of the heavier alternation class of the
    remaining arc on his first move, then only shifts. From any of his
    turns with an even number of slices left this secures the heavier of
    the two classes."""

    def __init__(self, cutting: Cutting):
        self.name = "bob-class"
        self.side = "bob"
        self.cutting = cutting
        self.max_jumps = 1
        self.gain_bound = None

    def next_move(self, record: GameRecord, pos: Position) -> int:
        if pos.to_move is not Player.BOB:
            raise PizzaError("bob-class moves only on Bob's turns")
        if pos.length == 1:
            return pos.left
        if not any(m.player is Player.BOB for m in record.moves):
            idxs = pos.remaining_indices()
            first_class = sum(self.cutting.size(i) for i in idxs[0::2])
            last_class = sum(self.cutting.size(i) for i in idxs[1::2])
            return pos.left if first_class >= last_class else pos.right
        if pos.turn_number == 2:
            return pos.left
        return shift_end(pos)

    @staticmethod
    def class_sizes(cutting: Cutting, pos: Position) -> tuple[Rat, Rat]:
        idxs = pos.remaining_indices()
        return (
            sum(cutting.size(i) for i in idxs[0::2]),
            sum(cutting.size(i) for i in idxs[1::2]),
        )


class RandomStrategy(Strategy):
    """Seeded, stateless pseudo-random legal play (plumbing)."""

    def __init__(self, seed: int = 0, side: str = "both"):
        self.name = "random"
        self.side = side
        self.seed = seed
        self.max_jumps = None
        self.gain_bound = None

    def next_move(self, record: GameRecord, pos: Position) -> int:
        choices = sorted(legal_moves(pos))
        mix = (
            self.seed * 1000003
            + pos.turn_number * 8191
            + (pos.start or 0) * 131
            + pos.length
        )
        return random.Random(mix).choice(choices)


def _pizza_of_view(part: SixArcPartition, view_index: int) -> int:
    return (2 * part.view.to_cycle(view_index)) % part.n


def _arc_pizza_set(part: SixArcPartition, name: str) -> frozenset[int]:
    return frozenset(_pizza_of_view(part, i) for i in part.arc_view_indices(name))


def _canonical(p: Cutting) -> tuple[tuple[Rat, ...], "object"]:
    if p.n % 2 == 0:
        raise PizzaError("odd slice count required")
    v = characteristic_cycle(p).elements
    return v, potential_table(v)


def alice_parity(p: Cutting) -> Strategy:
    """Even n: open in the heavier parity class, then shift only; >= |P|/2."""
    if p.n % 2 == 1:
        raise PizzaError("parity strategy needs an even slice count")
    even_total = sum(p.slices[0::2])
    odd_total = sum(p.slices[1::2])
    first = 0 if even_total >= odd_total else 1
    return PlanStrategy(
        "parity", first, max_jumps=0, gain_bound=p.total * HALF
    )


def alice_zero_jump(p: Cutting) -> Strategy:
    """Odd n: open on a maximum-potential element, then shift only; >= p(V)."""
    v, table = _canonical(p)
    n = p.n
    pv = table.cycle_potential
    k = next(i for i in range(n) if table.potentials[i] == pv)
    return PlanStrategy(
        "zero-jump", (2 * k) % n, max_jumps=0, gain_bound=pv
    )


def _require_partition(p: Cutting, partition: SixArcPartition | None) -> SixArcPartition:
    if partition is not None:
        return partition
    v, table = _canonical(p)
    if 2 * table.cycle_potential >= sum(v):
        raise PotentialTooHighError("p(V) >= |V|/2: use the zero-jump strategy")
    return find_minimal_triple(v).partition


def alice_one_jump_halfb(p: Cutting, partition: SixArcPartition | None = None) -> Strategy:
    """Open at a median slice of B, shift inside B, one jump into what is
    left of E when the shift would leave B; >= b/2 + min(c+d, f+a)."""
    part = _require_partition(p, partition)
    a, b, c, d, e, f = part.sizes
    bs, blen = part.arc_range("B")
    first = _pizza_of_view(part, bs + median_index(part.arc_values("B")))
    return PlanStrategy(
        "one-jump-halfb",
        first,
        max_jumps=1,
        gain_bound=b * HALF + min(c + d, f + a),
        stay=_arc_pizza_set(part, "B"),
        partition=part,
    )


@dataclass(frozen=True)
class AdvantageProfile:
    """Per-step difference between the mover's takes in B and the replies
    in E, measured from either end of B."""

    k: int
    h: tuple[Rat, ...]  # h[i] = |B_i| - |E_i|, first i slices
    h_rev: tuple[Rat, ...]  # from the other end

    def validate(self) -> None:
        assert self.h[0] == 0 and self.h_rev[0] == 0
        assert all(x >= 0 for x in self.h), "initial advantage went negative"
        assert all(x >= 0 for x in self.h_rev), "final advantage went negative"


def advantage_profile(part: SixArcPartition) -> AdvantageProfile:
    k = part.arc_range("B")[1]
    bvals = part.arc_values("B")
    evals = part.arc_values("E")
    h: list[Rat] = [0]
    for i in range(k):
        h.append(h[-1] + bvals[i] - evals[i])
    h_rev: list[Rat] = [0]
    for i in range(1, k + 1):
        h_rev.append(h_rev[-1] + bvals[k - i] - evals[k + 1 - i])
    profile = AdvantageProfile(k, tuple(h), tuple(h_rev))
    profile.validate()
    return profile


def alice_one_jump_38(p: Cutting, partition: SixArcPartition | None = None) -> Strategy:
    """One-jump strategy with gain >= 3b/8 + e/2 + min(c+d, f+a).

    When 3b/8 <= e/2 it opens in E and shifts. Otherwise it opens inside B
    placed so that by the time the jump happens the advantage banked over
    the opponent's takes in E exceeds 3b/8 - e/2; when no single placement
    works it runs the median play on the short initial or final segment of
    B whose opposing piece of E is small.
    """
    part = _require_partition(p, partition)
    a, b, c, d, e, f = part.sizes
    m = min(c + d, f + a)
    bound = b * Fraction(3, 8) + e * HALF + m
    bs, k = part.arc_range("B")
    es, le = part.arc_range("E")

    if 3 * b <= 4 * e:  # 3b/8 - e/2 <= 0: any slice of E has potential e + m
        return PlanStrategy(
            "one-jump-38",
            _pizza_of_view(part, es),
            max_jumps=0,
            gain_bound=bound,
            partition=part,
            notes={"case": "open-in-E"},
        )

    prof = advantage_profile(part)
    # largest i with h(i) <= 3b/8 - e/2, kept exact via 8*h <= 3b - 4e
    i_star = max(i for i in range(k + 1) if 8 * prof.h[i] <= 3 * b - 4 * e)
    ip_star = max(i for i in range(k + 1) if 8 * prof.h_rev[i] <= 3 * b - 4 * e)

    if i_star + ip_star <= k:
        # open anywhere in B outside the two low-advantage ends
        first = _pizza_of_view(part, bs + i_star)
        return PlanStrategy(
            "one-jump-38",
            first,
            max_jumps=1,
            gain_bound=bound,
            stay=_arc_pizza_set(part, "B"),
            partition=part,
            notes={"case": "one-segment", "i": i_star, "i_rev": ip_star},
        )

    # the low-advantage ends overlap: play the median strategy on the
    # initial segment B^1 (paired with E^1) or its mirror, whichever faces
    # the smaller piece of E
    len_b1, len_b3 = k - ip_star, k - i_star
    e1 = part.view_range_size(es, len_b1 + 1)
    e3 = part.view_range_size(es + le - (len_b3 + 1), len_b3 + 1)
    if e1 <= e3:
        seg_start, seg_len = bs, len_b1
    else:
        seg_start, seg_len = bs + i_star, len_b3
    assert seg_len >= 1, "segment empty despite positive advantage target"
    window = part.view_range_values(seg_start, seg_len)
    first = _pizza_of_view(part, seg_start + median_index(window))
    stay = frozenset(_pizza_of_view(part, seg_start + i) for i in range(seg_len))
    return PlanStrategy(
        "one-jump-38",
        first,
        max_jumps=1,
        gain_bound=bound,
        stay=stay,
        partition=part,
        notes={"case": "segment", "i": i_star, "i_rev": ip_star, "segment_start": seg_start, "segment_len": seg_len},
    )


def alice_two_jump(p: Cutting, partition: SixArcPartition | None = None) -> Strategy:
    """Two-jump strategy with gain >= b/2 + e/4 + min(c+d, f+a).

    Phase one plays a one-jump strategy on the shorter cycle made of B and
    E concatenated; the first time the opponent takes an end slice of E,
    one more jump claims the exposed remainder of E and shifting finishes
    the game.
    """
    part = _require_partition(p, partition)
    a, b, c, d, e, f = part.sizes
    m = min(c + d, f + a)
    bound = b * HALF + e * QUARTER + m
    bs, k = part.arc_range("B")
    es, le = part.arc_range("E")
    trigger = frozenset(
        {_pizza_of_view(part, es), _pizza_of_view(part, es + le - 1)}
    )

    # auxiliary cycle: B then E, in view order
    vp_sizes = part.arc_values("B") + part.arc_values("E")

    def vp_to_view(j: int) -> int:
        return bs + j if j < k else es + (j - k)
    aux = potential_table(vp_sizes)
    aux_total = sum(vp_sizes)

    def open_in_b_at_max_potential() -> int:
        best = None
        for j in range(k):
            pot = aux.potentials[j]
            if best is None or pot > best[0]:
                best = (pot, j)
        assert best is not None
        return _pizza_of_view(part, vp_to_view(best[1]))

    if 2 * aux.cycle_potential >= aux_total:
        return PlanStrategy(
            "two-jump",
            open_in_b_at_max_potential(),
            max_jumps=1,
            gain_bound=bound,
            trigger=trigger,
            partition=part,
            notes={"case": "aux-zero-jump"},
        )

    aux_triple = find_minimal_triple(vp_sizes, min_start=k)
    aux_part = aux_triple.partition  # arcs of the B|E cycle; A'B'C' tiles E
    b_prime = aux_part.sizes[1]
    if b_prime == 0:
        return PlanStrategy(
            "two-jump",
            open_in_b_at_max_potential(),
            max_jumps=1,
            gain_bound=bound,
            trigger=trigger,
            partition=part,
            notes={"case": "aux-zero-jump-bprime-0"},
        )

    bps, bplen = aux_part.arc_range("B")
    med = bps + median_index(aux_part.arc_values("B"))

    def pizza_of_aux(view2_index: int) -> int:
        vp_index = aux_part.view.to_cycle(view2_index)
        return _pizza_of_view(part, vp_to_view(vp_index))

    stay = frozenset(pizza_of_aux(bps + i) for i in range(bplen))
    return PlanStrategy(
        "two-jump",
        pizza_of_aux(med),
        max_jumps=2,
        gain_bound=bound,
        stay=stay,
        trigger=trigger,
        partition=part,
        notes={
            "case": "aux-one-jump",
            "aux_partition": aux_part,
            "aux_e_prime": frozenset(pizza_of_aux(i) for i in aux_part.arc_view_indices("E")),
        },
    )


def alice_small_odd(p: Cutting) -> Strategy:
    """Odd 3 <= n <= 13: one jump suffices for half the pizza.

    Some arc of B, D, F has length one; relabel it to B. Taking its slice,
    answering in E on turn 3 and shifting wins b + min(c+d, f+a), which
    beats half whenever the plain covering gains do not.
    """
    if p.n % 2 == 0 or not 3 <= p.n <= 13:
        raise PizzaError("small-odd strategy covers odd n between 3 and 13")
    v, table = _canonical(p)
    if 2 * table.cycle_potential >= sum(v):
        s = alice_zero_jump(p)
        s.name = "small-odd"
        return s
    part = find_minimal_triple(v).partition
    lengths = part.lengths
    if lengths[1] == 1:
        pass
    elif lengths[3] == 1:
        part = part.rotate_labels(1)
    elif lengths[5] == 1:
        part = part.rotate_labels(2)
    else:
        raise AssertionError("n <= 13 must put length 1 on one of B, D, F")
    a, b, c, d, e, f = part.sizes
    g1 = b + min(c + d, f + a)
    g2 = max(c + d + e, e + f + a)
    if g1 > g2:
        bs, _ = part.arc_range("B")
        return PlanStrategy(
            "small-odd",
            _pizza_of_view(part, bs),
            max_jumps=1,
            gain_bound=g1,
            stay=_arc_pizza_set(part, "B"),
            partition=part,
        )
    s = alice_zero_jump(p)
    return PlanStrategy(
        "small-odd", s.first, max_jumps=0, gain_bound=g2, partition=part
    )


def _take_only_slice(p: Cutting) -> Strategy:
    return PlanStrategy("single", 0, max_jumps=0, gain_bound=p.total)


def _normalized_partition(p: Cutting) -> SixArcPartition:
    """Canonical partition with a+b+c <= c+d+e <= e+f+a."""
    v, table = _canonical(p)
    part = find_minimal_triple(v).partition
    sums = part.triple_sums()
    assert sums[0] == min(sums), "anchored member is the minimum half-circle"
    if sums[1] > sums[2]:
        part = part.reflect()
    return part


def alice_dispatch(p: Cutting) -> Strategy:
    """Linear-precompute dispatcher guaranteeing g(n)|P| with <= 2 jumps.

    g(n) is 1 for n = 1, 4/9 for odd n >= 15, and 1/2 otherwise.
    """
    if p.n == 1:
        s = _take_only_slice(p)
    elif p.n % 2 == 0:
        s = alice_parity(p)
    else:
        v, table = _canonical(p)
        if 2 * table.cycle_potential >= sum(v):
            s = alice_zero_jump(p)
        elif p.n <= 13:
            s = alice_small_odd(p)
        else:
            part = _normalized_partition(p)
            candidates = [
                alice_zero_jump(p),
                alice_two_jump(p, part),
                alice_two_jump(p, part.rotate_labels(2)),
            ]
            s = max(candidates, key=lambda st: st.gain_bound)
    s.name = "dispatch-49"
    return s


def alice_dispatch_one_jump(p: Cutting) -> Strategy:
    """One-jump dispatcher guaranteeing 7|P|/16 for odd n, |P|/2 for even."""
    if p.n == 1:
        s = _take_only_slice(p)
    elif p.n % 2 == 0:
        s = alice_parity(p)
    else:
        v, table = _canonical(p)
        if 2 * table.cycle_potential >= sum(v):
            s = alice_zero_jump(p)
        else:
            part = _normalized_partition(p)
            candidates = [
                alice_zero_jump(p),
                alice_one_jump_halfb(p, part),
                alice_one_jump_halfb(p, part.rotate_labels(2)),
                alice_one_jump_38(p, part),
            ]
            s = max(candidates, key=lambda st: st.gain_bound)
    s.name = "dispatch-716"
    return s


def bob_take_class(p: Cutting) -> Strategy:
    return BobClassStrategy(p)


def dispatch_gains(part: SixArcPartition) -> tuple[Rat, Rat, Rat]:
    """The three bound formulas the two-jump dispatcher chooses between,
    on an already normalized partition."""
    a, b, c, d, e, f = part.sizes
    return (e + f + a, b * HALF + e * QUARTER + c + d, f * HALF + c * QUARTER + a + b)


def dispatch_one_jump_gains(part: SixArcPartition) -> tuple[Rat, Rat, Rat, Rat]:
    a, b, c, d, e, f = part.sizes
    return (
        e + f + a,
        b * HALF + c + d,
        f * HALF + a + b,
        b * Fraction(3, 8) + e * HALF + c + d,
    )


def g_of_n(n: int) -> Fraction:
    """Best guaranteed fraction over all cuttings into n slices."""
    if n == 1:
        return Fraction(1)
    if n % 2 == 1 and n >= 15:
        return Fraction(4, 9)
    return Fraction(1, 2)


# --- engine registry ---------------------------------------------------------

ENGINE_NAMES = (
    "parity",
    "zero-jump",
    "one-jump-halfb",
    "one-jump-38",
    "two-jump",
    "small-odd",
    "dispatch-49",
    "dispatch-716",
    "bob-class",
    "optimal",
    "random",
)

_ALICE_FACTORIES = {
    "parity": alice_parity,
    "zero-jump": alice_zero_jump,
    "one-jump-halfb": alice_one_jump_halfb,
    "one-jump-38": alice_one_jump_38,
    "two-jump": alice_two_jump,
    "small-odd": alice_small_odd,
    "dispatch-49": alice_dispatch,
    "dispatch-716": alice_dispatch_one_jump,
}


def make_engine(name: str, cutting: Cutting, side: Player, params: dict | None = None) -> Strategy:
    """Instantiate a named engine to play ``side`` on ``cutting``."""
    params = params or {}
    if name in _ALICE_FACTORIES:
        if side is not Player.ALICE:
            raise PizzaError(f"engine {name!r} only plays alice")
        return _ALICE_FACTORIES[name](cutting)
    if name == "bob-class":
        if side is not Player.BOB:
            raise PizzaError("engine 'bob-class' only plays bob")
        return bob_take_class(cutting)
    if name == "optimal":
        from .solver import optimal_player, solve_optimal

        player = optimal_player(solve_optimal(cutting))
        player.gain_bound = (
            player.table.alice_value if side is Player.ALICE else player.table.bob_value
        )
        return player
    if name == "random":
        return RandomStrategy(seed=int(params.get("seed", 0)))
    raise PizzaError(f"unknown engine {name!r}; have {ENGINE_NAMES}")
