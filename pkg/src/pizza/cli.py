"""Command-line front door: solve, analyze, gen, verify, bench, play, serve.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
Exact values are printed as fractions, never decimals.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bench as bench_mod
from . import verify as verify_mod
from .analysis import PotentialTooHighError, find_minimal_triple, potential_table
from .core import (
    Cutting,
    CuttingParseError,
    IllegalMoveError,
    PizzaError,
    Player,
    Position,
    apply_move,
    characteristic_cycle,
    classify_move,
    format_rational,
    legal_moves,
    parse_cutting_line,
    parse_cuttings,
)
from .cuttings import family_catalog, generate_family
from .solver import optimal_jump_count, solve_alice_jump_limited, solve_optimal
from .strategies import ENGINE_NAMES, make_engine


def _load_cuttings(arg: str) -> list[Cutting]:
    path = Path(arg)
    if path.is_file():
        return parse_cuttings(path.read_text())
    return [parse_cutting_line(arg)]


def _fraction_of_total(value, total) -> str:
    if total == 0:
        return "0"
    return format_rational(Fraction(value) / Fraction(total))


def cmd_solve(args) -> int:
    reports = []
    for cutting in _load_cuttings(args.cutting):
        table = solve_optimal(cutting)
        report = {
            "cutting": str(cutting),
            "n": cutting.n,
            "total": format_rational(cutting.total),
            "values": {
                "alice": format_rational(table.alice_value),
                "bob": format_rational(table.bob_value),
                "alice_share": _fraction_of_total(table.alice_value, cutting.total),
                "bob_share": _fraction_of_total(table.bob_value, cutting.total),
            },
            "best_first_moves": table.best_first_moves,
            "jumps": {
                "alice_optimal_trace": optimal_jump_count(cutting),
            },
        }
        if args.jumps is not None:
            report["values"][f"alice_jump_limited_{args.jumps}"] = format_rational(
                solve_alice_jump_limited(cutting, args.jumps)
            )
        if args.table:
            report["table"] = table.to_json_dict()
        reports.append(report)
    if args.json:
        print(json.dumps(reports if len(reports) > 1 else reports[0], indent=2))
        return 0
    for rep in reports:
        total = rep["total"]
        print(f"cutting: {rep['cutting']}")
        print(f"  Alice: {rep['values']['alice']} of {total} ({rep['values']['alice_share']})")
        print(f"  Bob:   {rep['values']['bob']} of {total} ({rep['values']['bob_share']})")
        print(f"  optimal first moves: {rep['best_first_moves']}")
        print(f"  Alice jumps in the traced optimal game: {rep['jumps']['alice_optimal_trace']}")
        if args.jumps is not None:
            key = f"alice_jump_limited_{args.jumps}"
            print(f"  Alice with at most {args.jumps} jump(s): {rep['values'][key]} of {total}")
    return 0


def cmd_analyze(args) -> int:
    cutting = _load_cuttings(args.cutting)[0]
    report: dict = {
        "cutting": str(cutting),
        "n": cutting.n,
        "total": format_rational(cutting.total),
    }
    if cutting.n % 2 == 0:
        report["note"] = "analysis tables need an odd slice count"
        even = sum(cutting.slices[0::2])
        odd = sum(cutting.slices[1::2])
        report["parity_classes"] = {
            "even": format_rational(even),
            "odd": format_rational(odd),
        }
    else:
        v = characteristic_cycle(cutting)
        table = potential_table(v)
        report["cycle"] = [format_rational(x) for x in v.elements]
        report["half_circle_sizes"] = [
            format_rational(s) for s in table.half_circles.sizes
        ]
        report["min_half_circle"] = {
            "start": table.half_circles.min_index,
            "size": format_rational(table.half_circles.min_size),
        }
        report["potentials"] = [format_rational(x) for x in table.potentials]
        report["cycle_potential"] = format_rational(table.cycle_potential)
        report["potential_at_least_half"] = bool(
            2 * table.cycle_potential >= cutting.total
        )
        if not report["potential_at_least_half"] and cutting.n >= 3:
            triple = find_minimal_triple(v)
            part = triple.partition
            report["minimal_triple"] = {
                "starts": list(triple.starts),
                "sizes": [format_rational(s) for s in triple.sizes],
            }
            report["partition"] = {
                "lengths": list(part.lengths),
                "sizes": [format_rational(s) for s in part.sizes],
                "arcs_cycle_indices": {
                    name: part.arc_cycle_indices(name) for name in "ABCDEF"
                },
            }
    if args.json:
        print(json.dumps(report, indent=2))
        return 0
    print(f"cutting: {report['cutting']} (n={report['n']}, total {report['total']})")
    if "note" in report:
        print(f"  {report['note']}")
        print(f"  parity class sizes: even {report['parity_classes']['even']}, odd {report['parity_classes']['odd']}")
        return 0
    print(f"  cycle: {','.join(report['cycle'])}")
    print(f"  half-circle sizes: {','.join(report['half_circle_sizes'])}")
    print(f"  minimum half-circle: start {report['min_half_circle']['start']}, size {report['min_half_circle']['size']}")
    print(f"  potentials: {','.join(report['potentials'])}")
    print(f"  cycle potential: {report['cycle_potential']}")
    if "partition" in report:
        print(f"  minimal triple starts: {report['minimal_triple']['starts']} sizes: {report['minimal_triple']['sizes']}")
        print(f"  partition lengths: {report['partition']['lengths']} sizes: {report['partition']['sizes']}")
    else:
        print("  potential is at least half the pizza: open there and shift")
    return 0


def cmd_gen(args) -> int:
    if args.list:
        if args.json:
            print(json.dumps(family_catalog(), indent=2))
        else:
            for fam in family_catalog():
                params = ", ".join(
                    f"{p['name']}={p['default']}" for p in fam["params"]
                )
                print(f"{fam['name']}: {fam['summary']}" + (f" [{params}]" if params else ""))
        return 0
    if not args.family:
        raise CliUsageError("gen needs a family name or --list")
    params = {}
    for item in args.param or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise CliUsageError(f"--param expects key=value, got {item!r}")
        params[key] = value
    cutting = generate_family(args.family, **params)
    print(str(cutting))
    return 0


def cmd_verify(args) -> int:
    def progress(res):
        if not args.json:
            print(res.line(), flush=True)

    results = verify_mod.run_suite(args.suite, progress)
    ok = all(r.ok for r in results)
    if args.json:
        print(
            json.dumps(
                [
                    {"suite": r.suite, "criterion": r.criterion, "pass": r.ok, "detail": r.detail}
                    for r in results
                ],
                indent=2,
            )
        )
    else:
        passed = sum(r.ok for r in results)
        print(f"{passed}/{len(results)} criteria passed")
    return 0 if ok else 1


def cmd_bench(args) -> int:
    pre = bench_mod.bench_precompute(max_exp=args.max_exp, repeat=args.repeat)
    dp = bench_mod.bench_dp(max_n=args.dp_max_n, repeat=args.repeat)
    if args.json:
        print(json.dumps({"precompute": pre.to_json_dict(), "dp": dp.to_json_dict()}, indent=2))
    else:
        print(pre.table())
        print()
        print(dp.table())
    if pre.exponent >= 1.3:
        print(f"precompute exponent {pre.exponent:.3f} is not subquadratic-linear (< 1.3)", file=sys.stderr)
        return 1
    return 0


def cmd_play(args) -> int:
    cutting = _load_cuttings(args.cutting)[0]
    human = Player.ALICE if args.side == "alice" else Player.BOB
    engine_side = human.other
    params = {"seed": args.seed} if args.seed is not None else {}
    engine = make_engine(args.engine, cutting, engine_side, params)
    human_moves = [int(tok) for tok in args.moves.split(",") if tok.strip() != ""] if args.moves else []
    taken_iter = iter(human_moves)

    from .core import GameRecord, Move

    pos = Position.initial(cutting.n)
    record = GameRecord(cutting)
    transcript = []
    while not pos.game_over:
        mover = pos.to_move
        if mover is human:
            try:
                index = next(taken_iter)
            except StopIteration:
                print(
                    f"turn {pos.turn_number}: the {human.value} side needs a move and none is left "
                    "(non-interactive replay; use the web UI for live play)",
                    file=sys.stderr,
                )
                return 1
        else:
            index = engine.next_move(record, pos)
        legal = legal_moves(pos)
        if index not in legal:
            print(
                f"turn {pos.turn_number}: illegal move {index}; legal: {sorted(legal)}",
                file=sys.stderr,
            )
            return 1
        kind = classify_move(pos, index)
        record.push(Move(pos.turn_number, mover, index, kind))
        transcript.append(
            (pos.turn_number, mover.value, index, kind.value, format_rational(cutting.size(index)))
        )
        pos = apply_move(pos, index)
    if args.json:
        print(
            json.dumps(
                {
                    "cutting": str(cutting),
                    "engine": args.engine,
                    "human_side": human.value,
                    "moves": [
                        {"turn": t, "player": p, "index": i, "kind": k, "size": s}
                        for t, p, i, k, s in transcript
                    ],
                    "gains": {
                        "alice": format_rational(record.alice_gain),
                        "bob": format_rational(record.bob_gain),
                    },
                },
                indent=2,
            )
        )
        return 0
    for t, p, i, k, s in transcript:
        marker = "engine" if p != human.value else "human"
        print(f"turn {t:>2} {p:<5} ({marker}) takes slice {i} [{k}] size {s}")
    print(f"final gains: alice {format_rational(record.alice_gain)}, bob {format_rational(record.bob_gain)}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(log_path=args.log)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


class CliUsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pizza",
        description="Exact engine and solver for the circular pizza-sharing game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="optimal values and first moves for a cutting")
    p.add_argument("cutting", help="inline cutting (sizes or digit string) or a file path")
    p.add_argument("--jumps", type=int, default=None, help="also solve with this jump budget for Alice")
    p.add_argument("--json", action="store_true")
    p.add_argument("--table", action="store_true", help="include the full value table in --json output")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("analyze", help="cycle, half-circle sizes, potentials, minimal triple")
    p.add_argument("cutting")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("gen", help="emit a named cutting family")
    p.add_argument("family", nargs="?", help="family name (see --list)")
    p.add_argument("--param", "-p", action="append", help="family parameter key=value")
    p.add_argument("--list", action="store_true", help="list families and parameters")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", choices=verify_mod.SUITES, default="all")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("bench", help="time the linear precompute and the quadratic DP")
    p.add_argument("--max-exp", type=int, default=20, help="largest precompute size is 2**max_exp + 1")
    p.add_argument("--dp-max-n", type=int, default=2000)
    p.add_argument("--repeat", type=int, default=3, help="repetitions per point; medians reported")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("play", help="non-interactive replay against an engine")
    p.add_argument("cutting")
    p.add_argument("--engine", required=True, choices=ENGINE_NAMES)
    p.add_argument("--side", required=True, choices=("alice", "bob"), help="the human side")
    p.add_argument("--moves", default="", help="comma-separated human moves in turn order")
    p.add_argument("--seed", type=int, default=None, help="seed for the random engine")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_play)

    p = sub.add_parser("serve", help="run the JSON-over-HTTP game service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--log", default=None, help="append-only JSON-lines log of finished games")
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliUsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (CuttingParseError, IllegalMoveError, PotentialTooHighError, PizzaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
