"""Exact engine, solver and verification suite for the circular
pizza-sharing game."""

from .core import (
    CharacteristicCycle,
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
from .analysis import (
    HalfCircleSizes,
    MinimalTriple,
    PotentialTable,
    PotentialTooHighError,
    SixArcPartition,
    find_minimal_triple,
    half_circle_sizes,
    median_slice,
    potential_table,
)
from .solver import (
    ValueTable,
    best_response_gain,
    brute_force_value,
    optimal_jump_count,
    solve_alice_jump_limited,
    solve_bob_jump_limited,
    solve_optimal,
)
from .strategies import (
    Strategy,
    alice_dispatch,
    alice_dispatch_one_jump,
    alice_one_jump_38,
    alice_one_jump_halfb,
    alice_parity,
    alice_small_odd,
    alice_two_jump,
    alice_zero_jump,
    bob_take_class,
    g_of_n,
    make_engine,
)
from .cuttings import (
    cutting_15,
    cutting_21,
    cutting_23_onejump,
    extend_with_zeros,
    permutation_forcing,
    random_cutting,
    reduce_min_size,
    tight_zero_jump,
)

__version__ = "0.1.0"
