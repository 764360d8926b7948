"""The verification suite: every headline guarantee of the engine, run as
independent pass/fail criteria over deterministic fixtures.

Shared by ``pizza verify`` and tests/test_acceptance.py. Each criterion
returns a CriterionResult; all value comparisons are exact rational
equalities or inequalities, no tolerances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import bench as bench_mod
from .analysis import (
    find_minimal_triple,
    half_circle_sizes,
    half_circle_sizes_naive,
    is_minimal_triple,
    potential_table,
    potential_table_naive,
)
from .core import Cutting, Player, characteristic_cycle
from .cuttings import (
    alice_all_jumps_order,
    battery_analysis,
    battery_best_response,
    battery_main,
    battery_oracle,
    battery_reduction,
    cutting_15,
    cutting_21,
    cutting_23_onejump,
    extend_with_zeros,
    is_legal_order,
    permutation_forcing,
    reduce_min_size,
    tight_zero_jump,
)
from .solver import (
    best_response_gain,
    brute_force_value,
    forced_order_trace,
    max_jumps_used,
    optimal_jump_count,
    solve_alice_jump_limited,
    solve_optimal,
)
from .strategies import alice_dispatch, alice_dispatch_one_jump, g_of_n

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CriterionResult:
    suite: str
    criterion: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} [{self.suite}] {self.criterion}: {self.detail}"


def _result(suite, criterion, ok, detail) -> CriterionResult:
    return CriterionResult(suite, criterion, bool(ok), detail)


# --- bounds suite ------------------------------------------------------------


def check_witness_15() -> CriterionResult:
    table = solve_optimal(Cutting.from_digits("002020030300404"))
    ok = table.alice_value == 8 and table.bob_value == 10
    return _result(
        "bounds", "witness-15",
        ok, f"Alice {table.alice_value}, Bob {table.bob_value} of 18 (want 8/10)",
    )


def check_witness_family_15() -> CriterionResult:
    bad = []
    for omega in (0, Fraction(1, 4), HALF, Fraction(3, 4), 1):
        table = solve_optimal(cutting_15(omega))
        if not (table.alice_value == 4 and table.bob_value == 5 and table.cutting.total == 9):
            bad.append((omega, table.alice_value, table.bob_value))
    return _result(
        "bounds", "witness-family-15",
        not bad, "Alice 4, Bob 5 of 9 for five parameter values" if not bad else f"failing: {bad}",
    )


def check_witness_21() -> CriterionResult:
    table = solve_optimal(cutting_21())
    ok = table.alice_value == 4 and table.bob_value == 5
    return _result(
        "bounds", "witness-21",
        ok, f"Alice {table.alice_value}, Bob {table.bob_value} of 9 (want 4/5)",
    )


def check_one_jump_upper() -> CriterionResult:
    p = cutting_23_onejump()
    val = solve_alice_jump_limited(p, 1)
    pv = potential_table(characteristic_cycle(p)).cycle_potential
    ok = val == 14 and p.total == 32 and pv == 14
    return _result(
        "bounds", "one-jump-upper",
        ok, f"one-jump value {val} of {p.total}, potential {pv} (want 14 of 32, potential 14)",
    )


def check_zero_jump_tight() -> CriterionResult:
    p = tight_zero_jump()
    val = solve_alice_jump_limited(p, 0)
    ok = val == 1 and p.total == 3
    return _result(
        "bounds", "zero-jump-tight",
        ok, f"zero-jump value {val} of {p.total} (want 1 of 3)",
    )


def check_zero_padding() -> CriterionResult:
    base = cutting_15(HALF)
    bad = []
    for n in (17, 19, 21, 23, 25):
        table = solve_optimal(extend_with_zeros(base, n))
        if table.bob_value != 5:
            bad.append((n, table.bob_value))
    return _result(
        "bounds", "zero-padding",
        not bad, "Bob stays at 5 for n = 17..25" if not bad else f"failing: {bad}",
    )


# --- core suite --------------------------------------------------------------


def check_oracle_equivalence() -> CriterionResult:
    bad = []
    for spec, c in battery_oracle(500):
        if brute_force_value(c) != solve_optimal(c).alice_value:
            bad.append(spec)
    return _result(
        "core", "oracle-equivalence",
        not bad, "minimax tree walk equals the DP on 500 fixtures" if not bad else f"failing: {bad[:3]}",
    )


def check_analysis_correctness() -> CriterionResult:
    bad = []
    minimality_checked = 0
    for spec, c in battery_analysis(1000):
        v = characteristic_cycle(c).elements
        fast = half_circle_sizes(v)
        naive = half_circle_sizes_naive(v)
        if fast.sizes != naive.sizes or fast.min_index != naive.min_index:
            bad.append(("half-circles", spec))
            continue
        pots, pv = potential_table_naive(v)
        table = potential_table(v)
        if table.potentials != pots or table.cycle_potential != pv:
            bad.append(("potentials", spec))
            continue
        if c.n <= 15 and sum(v) > 0 and 2 * pv < sum(v):
            triple = find_minimal_triple(v)
            if not is_minimal_triple(v, triple.starts):
                bad.append(("triple", spec))
            minimality_checked += 1
    # low-potential cycles are rare in the uniform battery; top the
    # minimality check up with a zero-heavy scan at n <= 15
    rng = random.Random(424242)
    palette = (0, 0, 0, 1, 1, 2, 3, 5)
    while minimality_checked < 60:
        n = rng.choice((9, 11, 13, 15))
        v = tuple(rng.choice(palette) for _ in range(n))
        if sum(v) == 0:
            continue
        _, pv = potential_table_naive(v)
        if 2 * pv >= sum(v):
            continue
        triple = find_minimal_triple(v)
        if not is_minimal_triple(v, triple.starts):
            bad.append(("triple", v))
        minimality_checked += 1
    return _result(
        "core", "analysis-correctness",
        not bad,
        f"linear passes equal naive on 1000 fixtures; {minimality_checked} triples brute-checked"
        if not bad
        else f"failing: {bad[:3]}",
    )


# --- strategies suite --------------------------------------------------------


def _floor_values(fixtures) -> list[tuple[str, Cutting, dict]]:
    out = []
    for spec, c in fixtures:
        n = c.n
        vals = {"opt": solve_optimal(c).alice_value, "j1": solve_alice_jump_limited(c, 1)}
        if n % 2 == 0 or n <= 7:
            vals["j0"] = solve_alice_jump_limited(c, 0)
        if n % 2 == 1 and n >= 15:
            vals["j2"] = solve_alice_jump_limited(c, 2)
        out.append((spec, c, vals))
    return out


_FLOOR_CACHE: list | None = None


def _floors() -> list:
    global _FLOOR_CACHE
    if _FLOOR_CACHE is None:
        _FLOOR_CACHE = _floor_values(battery_main(1000))
    return _FLOOR_CACHE


def check_value_floors() -> CriterionResult:
    bad = []
    for spec, c, vals in _floors():
        n, total = c.n, c.total
        if vals["opt"] < g_of_n(n) * total:
            bad.append(("opt", spec))
        if "j0" in vals and vals["j0"] < HALF * total:
            bad.append(("j0", spec))
        if n % 2 == 1 and n in (9, 11, 13) and vals["j1"] < HALF * total:
            bad.append(("j1", spec))
        if "j2" in vals and vals["j2"] < Fraction(4, 9) * total:
            bad.append(("j2", spec))
    return _result(
        "strategies", "value-floors",
        not bad,
        "optimal >= g(n)|P| and restricted floors hold on 1000 fixtures"
        if not bad
        else f"failing: {bad[:3]}",
    )


def check_one_jump_floor() -> CriterionResult:
    bad = [spec for spec, c, vals in _floors() if vals["j1"] < Fraction(7, 16) * c.total]
    return _result(
        "strategies", "one-jump-floor",
        not bad,
        "one-jump value >= 7|P|/16 on 1000 fixtures" if not bad else f"failing: {bad[:3]}",
    )


def check_strategy_certification() -> CriterionResult:
    bad = []
    fixtures = battery_best_response(120)
    for spec, c in fixtures:
        s = alice_dispatch(c)
        gain = best_response_gain(c, s, Player.ALICE)
        jumps = max_jumps_used(c, s, Player.ALICE)
        if gain < g_of_n(c.n) * c.total or jumps > 2:
            bad.append(("dispatch-49", spec, gain, jumps))
        if c.n % 2 == 1:
            s7 = alice_dispatch_one_jump(c)
            gain7 = best_response_gain(c, s7, Player.ALICE)
            jumps7 = max_jumps_used(c, s7, Player.ALICE)
            if gain7 < Fraction(7, 16) * c.total or jumps7 > 1:
                bad.append(("dispatch-716", spec, gain7, jumps7))
    return _result(
        "strategies", "strategy-certification",
        not bad,
        f"both dispatchers certified by best-response search on {len(fixtures)} fixtures"
        if not bad
        else f"failing: {bad[:3]}",
    )


def check_reduction_lemma() -> CriterionResult:
    qualified = 0
    bad = []
    for spec, c in battery_reduction(150):
        assert all(s > 0 for s in c.slices)
        before = solve_optimal(c)
        if 2 * before.bob_value < c.total:
            continue
        qualified += 1
        reduced = reduce_min_size(c)
        after = solve_optimal(reduced)
        # relative gain must strictly increase: bob'/|P'| > bob/|P|
        if after.bob_value * c.total <= before.bob_value * reduced.total:
            bad.append(spec)
    ok = qualified >= 100 and not bad
    return _result(
        "strategies", "min-size-reduction",
        ok,
        f"relative gain strictly increased on {qualified} qualifying fixtures"
        if ok
        else f"qualified={qualified}, failing: {bad[:3]}",
    )


def check_permutation_forcing() -> CriterionResult:
    bad = []
    for n in range(4, 12):
        rng = random.Random(n)
        for _ in range(50):
            order = _random_legal_order(n, rng)
            c = permutation_forcing(order)
            trace = [m.index for m in forced_order_trace(c).moves]
            if trace != order:
                bad.append((n, order, trace))
        jump_order = alice_all_jumps_order(n)
        c = permutation_forcing(jump_order)
        want = n // 2 - 1
        got = optimal_jump_count(c)
        if got != want:
            bad.append((n, "all-jumps", got, want))
    return _result(
        "strategies", "permutation-forcing",
        not bad,
        "optimal play reproduces 50 random orders per n in 4..11, all-jump count matches"
        if not bad
        else f"failing: {bad[:3]}",
    )


def _random_legal_order(n: int, rng: random.Random) -> list[int]:
    first = rng.randrange(n)
    order = [first]
    left, right = first, first
    for _ in range(n - 1):
        if rng.random() < 0.5:
            left = (left - 1) % n
            order.append(left)
        else:
            right = (right + 1) % n
            order.append(right)
    assert is_legal_order(n, order)
    return order


# --- scaling suite -----------------------------------------------------------


def check_scaling(max_exp: int = 20, dp_max_n: int = 2000) -> CriterionResult:
    pre = bench_mod.bench_precompute(max_exp=max_exp)
    dp = bench_mod.bench_dp(max_n=dp_max_n)
    ok = pre.exponent < 1.3 and 1.7 <= dp.exponent <= 2.3
    return _result(
        "scaling", "scaling",
        ok,
        f"precompute exponent {pre.exponent:.3f} (< 1.3), DP exponent {dp.exponent:.3f} (in [1.7, 2.3])",
    )


# --- registry ----------------------------------------------------------------

CRITERIA: list[tuple[str, Callable[[], CriterionResult]]] = [
    ("witness-15", check_witness_15),
    ("witness-family-15", check_witness_family_15),
    ("witness-21", check_witness_21),
    ("one-jump-upper", check_one_jump_upper),
    ("zero-jump-tight", check_zero_jump_tight),
    ("value-floors", check_value_floors),
    ("one-jump-floor", check_one_jump_floor),
    ("strategy-certification", check_strategy_certification),
    ("oracle-equivalence", check_oracle_equivalence),
    ("zero-padding", check_zero_padding),
    ("min-size-reduction", check_reduction_lemma),
    ("permutation-forcing", check_permutation_forcing),
    ("analysis-correctness", check_analysis_correctness),
    ("scaling", check_scaling),
]

SUITES = ("core", "bounds", "strategies", "scaling", "all")

_SUITE_OF = {
    "witness-15": "bounds",
    "witness-family-15": "bounds",
    "witness-21": "bounds",
    "one-jump-upper": "bounds",
    "zero-jump-tight": "bounds",
    "zero-padding": "bounds",
    "oracle-equivalence": "core",
    "analysis-correctness": "core",
    "value-floors": "strategies",
    "one-jump-floor": "strategies",
    "strategy-certification": "strategies",
    "min-size-reduction": "strategies",
    "permutation-forcing": "strategies",
    "scaling": "scaling",
}


def run_suite(suite: str = "all", progress: Callable[[CriterionResult], None] | None = None) -> list[CriterionResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; have {SUITES}")
    results = []
    for name, fn in CRITERIA:
        if suite != "all" and _SUITE_OF[name] != suite:
            continue
        res = fn()
        results.append(res)
        if progress:
            progress(res)
    return results
