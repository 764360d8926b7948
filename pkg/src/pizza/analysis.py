"""Half-circle sizes, potentials, minimal triples and the six-arc partition.

Everything here works on a characteristic cycle given as a plain sequence of
exact sizes (odd length). Each computation has a linear-time implementation
plus a naive quadratic reference used by the test suite.

Terminology: a half-circle is an arc of (n+1)/2 consecutive cycle elements;
the potential of an element is the minimum size among half-circles covering
it; the cycle potential p(V) is the maximum element potential. A covering
triple of half-circles is minimal when it contains a half-circle of globally
minimum size, all members have size <= p(V), and no member can be swapped
for a strictly smaller half-circle without losing the cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import CharacteristicCycle, PizzaError, Rat


class PotentialTooHighError(PizzaError):
    """Raised when an operation needs p(V) < |V|/2 but the cycle has none."""


def _elements(v) -> tuple[Rat, ...]:
    if isinstance(v, CharacteristicCycle):
        return v.elements
    return tuple(v)


@dataclass(frozen=True)
class HalfCircleSizes:
    sizes: tuple[Rat, ...]
    min_index: int

    @property
    def min_size(self) -> Rat:
        return self.sizes[self.min_index]


def half_circle_sizes(v) -> HalfCircleSizes:
    """Sizes of all n half-circles by a sliding window, O(n).

    s_i covers elements i .. i+(n-1)/2; s_i = s_{i-1} - v_{i-1} + v_{i+(n-1)/2}.
    """
    elems = _elements(v)
    n = len(elems)
    if n % 2 == 0:
        raise PizzaError("half-circles need an odd cycle length")
    half = (n + 1) // 2
    s0 = sum(elems[:half])
    sizes = [s0]
    best, best_i = s0, 0
    s = s0
    for i in range(1, n):
        s = s - elems[i - 1] + elems[(i + half - 1) % n]
        sizes.append(s)
        if s < best:
            best, best_i = s, i
    return HalfCircleSizes(tuple(sizes), best_i)


def half_circle_sizes_naive(v) -> HalfCircleSizes:
    """Direct summation reference, O(n^2)."""
    elems = _elements(v)
    n = len(elems)
    if n % 2 == 0:
        raise PizzaError("half-circles need an odd cycle length")
    half = (n + 1) // 2
    sizes = tuple(sum(elems[(i + j) % n] for j in range(half)) for i in range(n))
    return HalfCircleSizes(sizes, min(range(n), key=lambda i: (sizes[i], i)))


@dataclass(frozen=True)
class PotentialTable:
    """Per-element potentials plus the left/right scan data on the arc X
    not covered by the anchored minimum half-circle."""

    potentials: tuple[Rat, ...]
    cycle_potential: Rat
    half_circles: HalfCircleSizes
    min_start: int  # anchored minimum half-circle
    x_start: int  # first element after it
    x_length: int
    p_left: tuple[Rat, ...]  # indexed along X
    p_right: tuple[Rat, ...]
    p_left_arg: tuple[int, ...]  # start of a half-circle realizing p_left
    p_right_arg: tuple[int, ...]


def potential_table_naive(v) -> tuple[tuple[Rat, ...], Rat]:
    """Potentials of every element by the definition, O(n^2)."""
    elems = _elements(v)
    n = len(elems)
    sizes = half_circle_sizes_naive(elems).sizes
    half = (n + 1) // 2
    pots = []
    for i in range(n):
        # half-circles starting at i-half+1 .. i cover element i
        pots.append(min(sizes[(i - j) % n] for j in range(half)))
    return tuple(pots), max(pots)


def potential_table(v, *, min_start: int | None = None) -> PotentialTable:
    """Potentials in O(n) total.

    Every element inside the minimum half-circle H has potential exactly
    |H|. On the uncovered arc X, any covering half-circle also covers one
    of X's two endpoints, so running minima of half-circle sizes from both
    sides give the potentials. ``min_start``, when given, must start a
    half-circle of minimum size and anchors the computation there.
    """
    elems = _elements(v)
    n = len(elems)
    hcs = half_circle_sizes(elems)
    if min_start is None:
        m = hcs.min_index
    else:
        m = min_start % n
        if hcs.sizes[m] != hcs.min_size:
            raise PizzaError("min_start does not start a minimum half-circle")
    if n == 1:
        return PotentialTable(
            potentials=(elems[0],),
            cycle_potential=elems[0],
            half_circles=hcs,
            min_start=m,
            x_start=0,
            x_length=0,
            p_left=(),
            p_right=(),
            p_left_arg=(),
            p_right_arg=(),
        )
    sizes = hcs.sizes
    half = (n + 1) // 2
    k = (m + half) % n  # first element not covered by H
    xlen = n - half  # == (n-1)/2

    # Right potential of x: min size over half-circles covering both x and
    # the last element of X, i.e. starts k-1 .. (index of x).
    p_right: list[Rat] = []
    p_right_arg: list[int] = []
    cur, cur_arg = sizes[(k - 1) % n], (k - 1) % n
    for j in range(xlen):
        g = (k + j) % n
        if sizes[g] < cur:
            cur, cur_arg = sizes[g], g
        p_right.append(cur)
        p_right_arg.append(cur_arg)

    # Left potential: starts (index of x) - half + 1 .. k, scanned inward
    # from the far end of X where the window is just {k-1, k}.
    p_left: list[Rat] = [0] * xlen
    p_left_arg: list[int] = [0] * xlen
    cur, cur_arg = sizes[k % n], k % n
    if sizes[(k - 1) % n] < cur:
        cur, cur_arg = sizes[(k - 1) % n], (k - 1) % n
    p_left[xlen - 1] = cur
    p_left_arg[xlen - 1] = cur_arg
    for j in range(xlen - 2, -1, -1):
        g = (k + j - half + 1) % n  # start entering the window
        if sizes[g] < cur:
            cur, cur_arg = sizes[g], g
        p_left[j] = cur
        p_left_arg[j] = cur_arg

    pots: list[Rat] = [hcs.min_size] * n
    for j in range(xlen):
        pots[(k + j) % n] = min(p_left[j], p_right[j])
    p_of_v = max(pots[(k + j) % n] for j in range(xlen))
    return PotentialTable(
        potentials=tuple(pots),
        cycle_potential=p_of_v,
        half_circles=hcs,
        min_start=m,
        x_start=k,
        x_length=xlen,
        p_left=tuple(p_left),
        p_right=tuple(p_right),
        p_left_arg=tuple(p_left_arg),
        p_right_arg=tuple(p_right_arg),
    )


def median_index(values: Sequence[Rat]) -> int:
    """First position with at most half the total strictly before and at
    most half strictly after it."""
    if not values:
        raise PizzaError("median of an empty arc")
    total = sum(values)
    prefix: Rat = 0
    for i, x in enumerate(values):
        # prefix <= total/2 and total - prefix - x <= total/2, kept exact
        if 2 * prefix <= total and 2 * (total - prefix - x) <= total:
            return i
        prefix += x
    raise AssertionError("median must exist")


def median_slice(v, start: int, length: int) -> int:
    """Cycle index of a median slice of the arc of ``length`` elements
    starting at ``start``."""
    elems = _elements(v)
    n = len(elems)
    window = [elems[(start + i) % n] for i in range(length)]
    return (start + median_index(window)) % n


class CycleView:
    """An oriented, rotated reading of a cycle of length n.

    View index i maps to cycle index offset + i (or offset - i when
    flipped). Lets arc bookkeeping stay in local coordinates while moves
    translate to pizza indices at the edges.
    """

    __slots__ = ("n", "offset", "flip")

    def __init__(self, n: int, offset: int = 0, flip: bool = False):
        self.n = n
        self.offset = offset % n
        self.flip = flip

    def to_cycle(self, i: int) -> int:
        return (self.offset - i) % self.n if self.flip else (self.offset + i) % self.n

    def from_cycle(self, k: int) -> int:
        return (self.offset - k) % self.n if self.flip else (k - self.offset) % self.n


ARC_NAMES = ("A", "B", "C", "D", "E", "F")


@dataclass(frozen=True)
class SixArcPartition:
    """Partition of the cycle into arcs A..F with covering half-circles
    ABC, CDE and EFA. Arc A starts at view index 0."""

    cycle: tuple[Rat, ...]
    view: CycleView
    lengths: tuple[int, int, int, int, int, int]

    @property
    def n(self) -> int:
        return len(self.cycle)

    def _cycle_prefix(self) -> list[Rat]:
        cached = getattr(self, "_prefix", None)
        if cached is None:
            cached = [0]
            for x in self.cycle:
                cached.append(cached[-1] + x)
            object.__setattr__(self, "_prefix", cached)
        return cached

    def view_range_size(self, start: int, length: int) -> Rat:
        """Sum of ``length`` view elements from ``start``, via prefix sums."""
        if length == 0:
            return 0
        n = self.n
        pre = self._cycle_prefix()
        lo = self.view.to_cycle(start + length - 1) if self.view.flip else self.view.to_cycle(start)
        hi = lo + length  # cycle range [lo, hi), wrapping allowed
        if hi <= n:
            return pre[hi] - pre[lo]
        return (pre[n] - pre[lo]) + pre[hi - n]

    @property
    def sizes(self) -> tuple[Rat, Rat, Rat, Rat, Rat, Rat]:
        cached = getattr(self, "_sizes", None)
        if cached is None:
            out = []
            pos = 0
            for l in self.lengths:
                out.append(self.view_range_size(pos, l))
                pos += l
            cached = tuple(out)
            object.__setattr__(self, "_sizes", cached)
        return cached

    def view_size(self, i: int) -> Rat:
        return self.cycle[self.view.to_cycle(i)]

    def view_range_values(self, start: int, length: int) -> tuple[Rat, ...]:
        """The ``length`` view elements from ``start``, extracted by slicing."""
        if length == 0:
            return ()
        n = self.n
        lo = self.view.to_cycle(start + length - 1) if self.view.flip else self.view.to_cycle(start)
        hi = lo + length
        vals = self.cycle[lo:hi] if hi <= n else self.cycle[lo:] + self.cycle[: hi - n]
        return vals[::-1] if self.view.flip else vals

    def arc_values(self, name: str) -> tuple[Rat, ...]:
        return self.view_range_values(*self.arc_range(name))

    def arc_range(self, name: str) -> tuple[int, int]:
        """(view start, length) of the named arc."""
        idx = ARC_NAMES.index(name)
        start = sum(self.lengths[:idx])
        return start, self.lengths[idx]

    def arc_view_indices(self, name: str) -> list[int]:
        start, length = self.arc_range(name)
        return list(range(start, start + length))

    def arc_cycle_indices(self, name: str) -> list[int]:
        return [self.view.to_cycle(i) for i in self.arc_view_indices(name)]

    def triple_sums(self) -> tuple[Rat, Rat, Rat]:
        a, b, c, d, e, f = self.sizes
        return (a + b + c, c + d + e, e + f + a)

    def rotate_labels(self, times: int = 1) -> "SixArcPartition":
        """Relabel (A,B,C,D,E,F) -> (C,D,E,F,A,B), ``times`` times."""
        part = self
        for _ in range(times % 3):
            shift = part.lengths[0] + part.lengths[1]
            new_offset = part.view.to_cycle(shift)
            view = CycleView(part.n, new_offset, part.view.flip)
            lengths = part.lengths[2:] + part.lengths[:2]
            part = SixArcPartition(part.cycle, view, lengths)
        return part

    def reflect(self) -> "SixArcPartition":
        """Reverse the cycle orientation; (a..f) becomes (c,b,a,f,e,d) and
        the covering half-circles are preserved as slice sets."""
        la, lb, lc, ld, le, lf = self.lengths
        last_of_c = self.view.to_cycle(la + lb + lc - 1)
        view = CycleView(self.n, last_of_c, not self.view.flip)
        return SixArcPartition(self.cycle, view, (lc, lb, la, lf, le, ld))

    def validate(self) -> None:
        la, lb, lc, ld, le, lf = self.lengths
        assert sum(self.lengths) == self.n
        assert la == ld + 1 >= 2 and lc == lf + 1 >= 2 and le == lb + 1 >= 2
        assert sum(self.sizes) == sum(self.cycle)


@dataclass(frozen=True)
class MinimalTriple:
    """Three covering half-circles, the first of globally minimum size."""

    cycle: tuple[Rat, ...]
    starts: tuple[int, int, int]  # cycle indices, starts[0] is the minimum member
    partition: SixArcPartition

    @property
    def sizes(self) -> tuple[Rat, Rat, Rat]:
        return self.partition.triple_sums()

    def covers(self) -> bool:
        n = len(self.cycle)
        half = (n + 1) // 2
        covered = [False] * n
        for s in self.starts:
            for j in range(half):
                covered[(s + j) % n] = True
        return all(covered)


def _partition_from_starts(
    cycle: tuple[Rat, ...], g1: int, g2: int, g3: int
) -> SixArcPartition:
    """Six arcs cut out by three pairwise distinct covering half-circles
    whose starts appear in cyclic order g1, g2, g3. The member starting at
    g1 becomes ABC."""
    n = len(cycle)
    half = (n + 1) // 2

    def gap(x: int, y: int) -> int:
        return (y - x) % n

    # A = [g1, end of member 3], C = [g2, end of member 1], E = [g3, end of member 2]
    la = gap(g1, (g3 + half) % n)
    lc = gap(g2, (g1 + half) % n)
    le = gap(g3, (g2 + half) % n)
    lb = gap((g3 + half) % n, g2)
    ld = gap((g1 + half) % n, g3)
    lf = gap((g2 + half) % n, g1)
    part = SixArcPartition(cycle, CycleView(n, g1), (la, lb, lc, ld, le, lf))
    part.validate()
    return part


def find_minimal_triple(v, *, min_start: int | None = None) -> MinimalTriple:
    """Minimal covering triple containing a fixed minimum half-circle, O(n).

    Picks the third cover point j in the uncovered arc X minimizing
    p_left(j) + p_right(j) subject to both being at most p(V); the two
    half-circles realizing those potentials complete the triple.

    Requires p(V) < |V|/2 (raises PotentialTooHighError otherwise). When
    ``min_start`` is given it must start a half-circle of minimum size.
    """
    elems = _elements(v)
    n = len(elems)
    table = potential_table(elems, min_start=min_start)
    total = sum(elems)
    if 2 * table.cycle_potential >= total:
        raise PotentialTooHighError(
            f"p(V) = {table.cycle_potential} is not below |V|/2 = {total}/2"
        )
    p = table.cycle_potential
    best = None
    for j in range(table.x_length):
        pl, pr = table.p_left[j], table.p_right[j]
        if pl <= p and pr <= p:
            if best is None or pl + pr < best[0]:
                best = (pl + pr, j)
    if best is None:
        raise AssertionError("no third cover point found; triple selection broken")
    j = best[1]
    h1 = table.p_left_arg[j]
    h2 = table.p_right_arg[j]
    starts_cyclic = _sort_cyclic(n, table.min_start, h1, h2)
    part = _partition_from_starts(tuple(elems), *starts_cyclic)
    return MinimalTriple(tuple(elems), starts_cyclic, part)


def _sort_cyclic(n: int, anchor: int, x: int, y: int) -> tuple[int, int, int]:
    """(anchor, then x and y in cyclic order from anchor)."""
    if x == anchor or y == anchor or x == y:
        raise AssertionError("triple members must be pairwise distinct")
    dx, dy = (x - anchor) % n, (y - anchor) % n
    return (anchor, x, y) if dx < dy else (anchor, y, x)


def minimal_triples_brute_force(v) -> list[tuple[int, int, int]]:
    """All minimal triples containing some minimum half-circle, by full
    enumeration. Test oracle."""
    elems = _elements(v)
    n = len(elems)
    hcs = half_circle_sizes_naive(elems)
    _, p = potential_table_naive(elems)
    total = sum(elems)
    if 2 * p >= total:
        raise PotentialTooHighError("p(V) >= |V|/2")
    masks = _cover_masks(n)
    full = (1 << n) - 1
    min_size = hcs.min_size
    out = []
    for s1 in range(n):
        if hcs.sizes[s1] != min_size:
            continue
        for s2 in range(n):
            for s3 in range(s2, n):
                trio = (s1, s2, s3)
                if len(set(trio)) != 3:
                    continue
                if masks[s1] | masks[s2] | masks[s3] != full:
                    continue
                if any(hcs.sizes[s] > p for s in trio):
                    continue
                if not _is_replacement_minimal(n, masks, hcs.sizes, trio, full):
                    continue
                out.append(trio)
    return out


def _cover_masks(n: int) -> list[int]:
    half = (n + 1) // 2
    masks = []
    for s in range(n):
        mask = 0
        for j in range(half):
            mask |= 1 << ((s + j) % n)
        masks.append(mask)
    return masks


def _is_replacement_minimal(n, masks, sizes, trio, full) -> bool:
    for drop in range(3):
        keep = masks[trio[(drop + 1) % 3]] | masks[trio[(drop + 2) % 3]]
        for cand in range(n):
            if sizes[cand] < sizes[trio[drop]] and keep | masks[cand] == full:
                return False
    return True


def is_minimal_triple(v, starts: Sequence[int]) -> bool:
    """Brute-force check of the minimality conditions for given starts."""
    elems = _elements(v)
    n = len(elems)
    hcs = half_circle_sizes_naive(elems)
    _, p = potential_table_naive(elems)
    masks = _cover_masks(n)
    full = (1 << n) - 1
    trio = tuple(starts)
    if masks[trio[0]] | masks[trio[1]] | masks[trio[2]] != full:
        return False
    if not any(hcs.sizes[s] == hcs.min_size for s in trio):
        return False
    if any(hcs.sizes[s] > p for s in trio):
        return False
    return _is_replacement_minimal(n, masks, hcs.sizes, trio, full)
