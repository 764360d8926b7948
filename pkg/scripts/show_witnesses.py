#!/usr/bin/env python3
"""Solve the named adversarial cuttings and print their exact values."""

import pathlib
import sys
from fractions import Fraction

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from pizza.analysis import potential_table  # noqa: E402
from pizza.core import characteristic_cycle, format_rational  # noqa: E402
from pizza.cuttings import (  # noqa: E402
    cutting_15,
    cutting_21,
    cutting_23_onejump,
    tight_zero_jump,
)
from pizza.solver import solve_alice_jump_limited, solve_optimal  # noqa: E402


def row(label, cutting, budgets=()):
    table = solve_optimal(cutting)
    pv = potential_table(characteristic_cycle(cutting)).cycle_potential
    parts = [
        f"{label:<14} n={cutting.n:<3} total={format_rational(cutting.total):<5}",
        f"alice={format_rational(table.alice_value):<5} bob={format_rational(table.bob_value):<5}",
        f"p(V)={format_rational(pv)}",
    ]
    for budget in budgets:
        val = solve_alice_jump_limited(cutting, budget)
        parts.append(f"alice[<= {budget} jumps]={format_rational(val)}")
    print("  ".join(parts))


def main() -> None:
    for omega in (0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1):
        row(f"p15(w={omega})", cutting_15(omega))
    row("p21", cutting_21())
    row("p23", cutting_23_onejump(), budgets=(1,))
    row("tight0", tight_zero_jump(), budgets=(0, 1, 2))


if __name__ == "__main__":
    main()
