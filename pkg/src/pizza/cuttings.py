"""Generators for the named adversarial cuttings, proof transformations and
reproducible random fixtures."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .core import (
    Cutting,
    PizzaError,
    Position,
    Rat,
    apply_move,
    as_rational,
    legal_moves,
    pizza_from_cycle,
)


def cutting_15(omega: Rat | str = Fraction(1, 2)) -> Cutting:
    """The 15-slice family 0 0 1 0 1 0 0 (1+w) 0 (2-w) 0 0 2 0 2, total 9.

    Against it the second player can secure 5/9 of the pizza for any
    parameter w in [0, 1]."""
    w = as_rational(omega)
    if not 0 <= w <= 1:
        raise PizzaError(f"parameter must be in [0, 1], got {w}")
    return Cutting.of([0, 0, 1, 0, 1, 0, 0, 1 + w, 0, 2 - w, 0, 0, 2, 0, 2])


def cutting_21() -> Cutting:
    """The 21-slice 0/1 cutting where the second player secures 5/9."""
    return Cutting.from_digits("001010010101001010101")


def cutting_23_onejump() -> Cutting:
    """The 23-slice cutting holding a one-jump Alice to 7/16 of 32."""
    return Cutting.from_digits("20200200202006060050500")


def tight_zero_jump() -> Cutting:
    """The 9-slice pizza whose characteristic cycle is 1 0 0 1 0 0 1 0 0;
    a zero-jump Alice gets exactly a third of it."""
    return pizza_from_cycle((1, 0, 0, 1, 0, 0, 1, 0, 0))


def extend_with_zeros(p: Cutting, n_target: int) -> Cutting:
    """Insert n_target - n zeros between the first two consecutive zero
    slices. With an even number of inserted zeros this preserves the
    second player's guarantee on the 15-slice family."""
    if n_target < p.n:
        raise PizzaError(f"cannot shrink from {p.n} to {n_target} slices")
    if n_target == p.n:
        return p
    n = p.n
    spot = None
    for i in range(n):
        if p.slices[i] == 0 and p.slices[(i + 1) % n] == 0:
            spot = i
            break
    if spot is None:
        raise PizzaError("no two consecutive zero slices to extend between")
    pad = (0,) * (n_target - n)
    return Cutting(p.slices[: spot + 1] + pad + p.slices[spot + 1 :])


def reduce_min_size(p: Cutting) -> Cutting:
    """Subtract the minimum slice size from every slice."""
    x = min(p.slices)
    if x == 0:
        return p
    return Cutting(tuple(s - x for s in p.slices))


def is_legal_order(n: int, order: list[int]) -> bool:
    """Whether ``order`` is a playable take sequence (each prefix contiguous)."""
    if sorted(order) != list(range(n)):
        return False
    pos = Position.initial(n)
    for idx in order:
        if idx not in legal_moves(pos):
            return False
        pos = apply_move(pos, idx)
    return True


def permutation_forcing(order: list[int]) -> Cutting:
    """Sizes 1, 1/2, 1/4, ... assigned in the desired take order.

    Each slice strictly outweighs all later ones together, so optimal play
    follows the order under any tie rule."""
    n = len(order)
    if not is_legal_order(n, order):
        raise PizzaError(f"not a legal play order: {order}")
    slices: list[Rat] = [0] * n
    for t, idx in enumerate(order):
        slices[idx] = Fraction(1, 2**t)
    return Cutting(tuple(slices))


def alice_all_jumps_order(n: int) -> list[int]:
    """A legal order 0, 1, n-1, 2, n-2, ... forcing Alice to jump on every
    eligible turn; with permutation_forcing it realizes floor(n/2) - 1
    optimal-play jumps."""
    if n < 2:
        raise PizzaError("need at least two slices")
    order = [0, 1]
    lo, hi = 2, n - 1
    take_high = True
    while len(order) < n:
        if take_high:
            order.append(hi)
            hi -= 1
        else:
            order.append(lo)
            lo += 1
        take_high = not take_high
    return order


def random_cutting(n: int, max_size: int, seed: int, min_size: int = 0) -> Cutting:
    """Reproducible integer-sized cutting for property suites."""
    if n < 1:
        raise PizzaError("need at least one slice")
    rng = random.Random(seed)
    return Cutting(tuple(rng.randint(min_size, max_size) for _ in range(n)))


@dataclass(frozen=True)
class FamilyParam:
    name: str
    kind: str  # "rational" | "int"
    default: str
    minimum: str | None = None
    maximum: str | None = None


@dataclass(frozen=True)
class Family:
    name: str
    summary: str
    params: tuple[FamilyParam, ...]
    build: Callable[..., Cutting] = field(compare=False)

    def generate(self, **kwargs) -> Cutting:
        known = {p.name for p in self.params}
        for key in kwargs:
            if key not in known:
                raise PizzaError(f"family {self.name} has no parameter {key!r}")
        args = {}
        for p in self.params:
            raw = kwargs.get(p.name, p.default)
            args[p.name] = as_rational(raw) if p.kind == "rational" else int(raw)
        return self.build(**args)


FAMILIES: dict[str, Family] = {}


def _family(name, summary, params):
    def wrap(fn):
        FAMILIES[name] = Family(name, summary, tuple(params), fn)
        return fn

    return wrap


_family(
    "p15",
    "15-slice family with one rational parameter, total 9",
    [FamilyParam("omega", "rational", "1/2", "0", "1")],
)(lambda omega: cutting_15(omega))

_family("p21", "21-slice 0/1 cutting, total 9", [])(lambda: cutting_21())

_family("p23", "23-slice one-jump bound witness, total 32", [])(
    lambda: cutting_23_onejump()
)

_family("tight0", "9-slice zero-jump tightness witness, total 3", [])(
    lambda: tight_zero_jump()
)

_family(
    "ext15",
    "15-slice family padded with zeros to n slices",
    [
        FamilyParam("omega", "rational", "1/2", "0", "1"),
        FamilyParam("n", "int", "17", "15"),
    ],
)(lambda omega, n: extend_with_zeros(cutting_15(omega), n))

_family(
    "random",
    "uniform integer slice sizes",
    [
        FamilyParam("n", "int", "15", "1"),
        FamilyParam("max_size", "int", "9", "0"),
        FamilyParam("seed", "int", "0"),
        FamilyParam("min_size", "int", "0", "0"),
    ],
)(lambda n, max_size, seed, min_size: random_cutting(n, max_size, seed, min_size))


def generate_family(name: str, **params) -> Cutting:
    if name not in FAMILIES:
        raise PizzaError(f"unknown family {name!r}; have {sorted(FAMILIES)}")
    return FAMILIES[name].generate(**params)


def family_catalog() -> list[dict]:
    out = []
    for fam in FAMILIES.values():
        out.append(
            {
                "name": fam.name,
                "summary": fam.summary,
                "params": [
                    {
                        "name": p.name,
                        "kind": p.kind,
                        "default": p.default,
                        "min": p.minimum,
                        "max": p.maximum,
                    }
                    for p in fam.params
                ],
            }
        )
    return out


# --- fixture batteries -----------------------------------------------------
#
# Deterministic cutting collections used by the verification suites. Each is
# also rendered to a manifest file (fixtures/*.txt) so CI runs are hermetic
# and reviewable; load_manifest() parses them back.

_MAIN_NS = tuple(range(1, 18))
_BR_NS = tuple(range(2, 22))
_ORACLE_NS = tuple(range(1, 14))
_MAX_SIZES = (1, 2, 3, 5, 9)


def battery_main(count: int = 1000) -> list[tuple[str, Cutting]]:
    """Random fixtures spanning n = 1..17 for the value-floor suites."""
    out = []
    for i in range(1, count + 1):
        n = _MAIN_NS[i % len(_MAIN_NS)]
        mx = _MAX_SIZES[i % len(_MAX_SIZES)]
        out.append((f"random n={n} max_size={mx} seed={i}", random_cutting(n, mx, i)))
    return out


def battery_best_response(count: int = 120) -> list[tuple[str, Cutting]]:
    """Fixtures (n <= 21) for strategy certification, plus the named
    adversarial cuttings."""
    out = []
    for i in range(1, count + 1):
        n = _BR_NS[i % len(_BR_NS)]
        mx = _MAX_SIZES[i % len(_MAX_SIZES)]
        seed = 2000 + i
        out.append(
            (f"random n={n} max_size={mx} seed={seed}", random_cutting(n, mx, seed))
        )
    out.append(("p15 omega=0", cutting_15(0)))
    out.append(("p15 omega=1/2", cutting_15(Fraction(1, 2))))
    out.append(("p15 omega=1", cutting_15(1)))
    out.append(("p21", cutting_21()))
    out.append(("p23", cutting_23_onejump()))
    out.append(("tight0", tight_zero_jump()))
    return out


def battery_oracle(count: int = 500) -> list[tuple[str, Cutting]]:
    """Fixtures with n <= 13 for DP-versus-brute-force equivalence."""
    out = []
    for i in range(1, count + 1):
        n = _ORACLE_NS[i % len(_ORACLE_NS)]
        mx = _MAX_SIZES[i % len(_MAX_SIZES)]
        seed = 3000 + i
        out.append(
            (f"random n={n} max_size={mx} seed={seed}", random_cutting(n, mx, seed))
        )
    return out


def battery_analysis(count: int = 1000) -> list[tuple[str, Cutting]]:
    """Odd-n fixtures for analysis cross-checks."""
    odd_ns = tuple(range(1, 42, 2))
    out = []
    for i in range(1, count + 1):
        n = odd_ns[i % len(odd_ns)]
        mx = _MAX_SIZES[i % len(_MAX_SIZES)]
        seed = 4000 + i
        out.append(
            (f"random n={n} max_size={mx} seed={seed}", random_cutting(n, mx, seed))
        )
    return out


def battery_reduction(count: int = 150) -> list[tuple[str, Cutting]]:
    """Odd all-positive cuttings where the second player keeps at least half.

    Uniform random cuttings almost never qualify (the first player already
    guarantees half for odd n <= 13), so these are randomized rotations of
    the scaled 15-slice family shifted up by a constant x <= scale, which
    keeps the second player's guarantee at 5k + x(n-1)/2 >= |P|/2.
    """
    out = []
    for i in range(1, count + 1):
        rng = random.Random(8000 + i)
        omega = Fraction(rng.randrange(5), 4)
        scale = rng.randint(1, 3)
        shift = rng.randint(1, scale)
        n = (15, 17, 19)[i % 3]
        base = extend_with_zeros(cutting_15(omega), n)
        rot = rng.randrange(n)
        slices = tuple(
            base.slices[(rot + j) % n] * scale + shift for j in range(n)
        )
        out.append(
            (
                f"reduction i={i} omega={omega} scale={scale} shift={shift} n={n} rot={rot}",
                Cutting(slices),
            )
        )
    return out


BATTERIES: dict[str, Callable[[], list[tuple[str, Cutting]]]] = {
    "battery_main": battery_main,
    "battery_best_response": battery_best_response,
    "battery_oracle": battery_oracle,
    "battery_analysis": battery_analysis,
}


def manifest_text(name: str) -> str:
    lines = [f"# fixture manifest: {name} (generated by scripts/make_manifests.py)"]
    for spec, _ in BATTERIES[name]():
        lines.append(spec)
    return "\n".join(lines) + "\n"


def parse_manifest_line(line: str) -> Cutting:
    parts = line.split()
    name, params = parts[0], {}
    for item in parts[1:]:
        key, _, value = item.partition("=")
        params[key] = value
    return generate_family(name, **params)


def load_manifest(text: str) -> list[tuple[str, Cutting]]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.append((line, parse_manifest_line(line)))
    return out


def load_packaged_manifest(name: str) -> list[tuple[str, Cutting]]:
    from importlib import resources

    text = resources.files("pizza").joinpath(f"fixtures/{name}.txt").read_text()
    return load_manifest(text)
