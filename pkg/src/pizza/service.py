"""JSON-over-HTTP game service: live sessions of a human against any engine.

Wire contract (all field names stable, values exact "num/den" strings plus
decimal conveniences):

  POST /games {cutting | family+params, engine, engine_params?, human_side}
  GET  /games/{id}
  POST /games/{id}/moves {index}
  GET  /games/{id}/analysis
  GET  /engines
  GET  /cuttings/families

Sessions live in memory; finished games are appended to a JSON-lines log.
Errors: 404 unknown session, 409 not the human's turn, 422 bad input,
400 illegal move (detail lists the legal indices).
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .core import (
    Cutting,
    GameRecord,
    Move,
    PizzaError,
    Player,
    Position,
    apply_move,
    characteristic_cycle,
    classify_move,
    format_rational,
    legal_moves,
    parse_cutting_line,
)
from .analysis import potential_table
from .cuttings import family_catalog, generate_family
from .solver import ValueTable, solve_optimal
from .strategies import ENGINE_NAMES, Strategy, make_engine

AWAITING_HUMAN = "awaiting-human"
AWAITING_ENGINE = "awaiting-engine"
FINISHED = "finished"


class CreateGameRequest(BaseModel):
    cutting: str | None = None
    family: str | None = None
    params: dict[str, str] = {}
    engine: str
    engine_params: dict[str, str] = {}
    human_side: str


class MoveRequest(BaseModel):
    index: int


@dataclass
class GameSession:
    id: str
    cutting: Cutting
    engine_name: str
    engine: Strategy
    human_side: Player
    record: GameRecord
    position: Position
    table: ValueTable
    status: str = AWAITING_HUMAN
    lock: threading.Lock = field(default_factory=threading.Lock)

    def replay_check(self) -> bool:
        """History must reproduce the stored position and gains exactly."""
        pos = Position.initial(self.cutting.n)
        rec = GameRecord(self.cutting)
        for move in self.record.moves:
            rec.push(move)
            pos = apply_move(pos, move.index)
        return pos == self.position and rec.alice_gain == self.record.alice_gain


def _decimal(value) -> float:
    return float(Fraction(value))


def session_view(s: GameSession) -> dict:
    pos = s.position
    view = {
        "id": s.id,
        "cutting": [format_rational(x) for x in s.cutting.slices],
        "n": s.cutting.n,
        "total": format_rational(s.cutting.total),
        "engine": s.engine_name,
        "human_side": s.human_side.value,
        "status": s.status,
        "position": {
            "turn_number": pos.turn_number if not pos.game_over else s.cutting.n + 1,
            "to_move": pos.to_move.value if not pos.game_over else None,
            "remaining_start": pos.start,
            "remaining_length": pos.length,
            "last_taken_end": pos.last_taken_end,
            "legal_moves": sorted(legal_moves(pos)) if not pos.game_over else [],
        },
        "history": [
            {
                "turn": m.turn,
                "player": m.player.value,
                "index": m.index,
                "kind": m.kind.value,
                "size": format_rational(s.cutting.size(m.index)),
            }
            for m in s.record.moves
        ],
        "gains": {
            "alice": format_rational(s.record.alice_gain),
            "bob": format_rational(s.record.bob_gain),
        },
        "gains_decimal": {
            "alice": _decimal(s.record.alice_gain),
            "bob": _decimal(s.record.bob_gain),
        },
    }
    return view


def analysis_view(s: GameSession) -> dict:
    pos = s.position
    out: dict = {
        "id": s.id,
        "status": s.status,
        "moves": [],
        "gains": {
            "alice": format_rational(s.record.alice_gain),
            "bob": format_rational(s.record.bob_gain),
        },
    }
    if pos.game_over:
        return out
    out["turn_number"] = pos.turn_number
    out["to_move"] = pos.to_move.value
    values = {}
    for idx in sorted(legal_moves(pos)):
        values[idx] = s.table.move_value(pos, idx)
    best = max(values.values())
    out["moves"] = [
        {
            "index": idx,
            "kind": classify_move(pos, idx).value,
            "value": format_rational(val),
            "value_decimal": _decimal(val),
            "optimal": val == best,
        }
        for idx, val in values.items()
    ]
    if pos.start is None and s.cutting.n % 2 == 1:
        table = potential_table(characteristic_cycle(s.cutting))
        n = s.cutting.n
        per_slice = [None] * n
        for k in range(n):
            per_slice[(2 * k) % n] = format_rational(table.potentials[k])
        out["potentials"] = {
            "per_slice": per_slice,
            "cycle_potential": format_rational(table.cycle_potential),
        }
    return out


def create_app(log_path: str | None = None) -> FastAPI:
    app = FastAPI(title="pizza game service")
    sessions: dict[str, GameSession] = {}
    registry_lock = threading.Lock()
    log_lock = threading.Lock()

    def log_finished(s: GameSession) -> None:
        if not log_path:
            return
        entry = {
            "id": s.id,
            "cutting": [format_rational(x) for x in s.cutting.slices],
            "engine": s.engine_name,
            "human_side": s.human_side.value,
            "moves": [
                {"turn": m.turn, "player": m.player.value, "index": m.index, "kind": m.kind.value}
                for m in s.record.moves
            ],
            "gains": {
                "alice": format_rational(s.record.alice_gain),
                "bob": format_rational(s.record.bob_gain),
            },
        }
        with log_lock:
            with open(log_path, "a") as fh:
                fh.write(json.dumps(entry) + "\n")

    def advance_engine(s: GameSession) -> None:
        """Apply engine moves until the human is up or the game ends."""
        while not s.position.game_over and s.position.to_move is not s.human_side:
            s.status = AWAITING_ENGINE
            idx = s.engine.next_move(s.record, s.position)
            assert idx in legal_moves(s.position), "engine move must be legal"
            kind = classify_move(s.position, idx)
            s.record.push(Move(s.position.turn_number, s.position.to_move, idx, kind))
            s.position = apply_move(s.position, idx)
        if s.position.game_over:
            s.status = FINISHED
            log_finished(s)
        else:
            s.status = AWAITING_HUMAN

    @app.get("/engines")
    def engines():
        alice_only = {
            "parity", "zero-jump", "one-jump-halfb", "one-jump-38",
            "two-jump", "small-odd", "dispatch-49", "dispatch-716",
        }
        out = []
        for name in ENGINE_NAMES:
            side = "alice" if name in alice_only else ("bob" if name == "bob-class" else "both")
            out.append({"name": name, "plays": side})
        return out

    @app.get("/cuttings/families")
    def families():
        return family_catalog()

    @app.post("/games", status_code=201)
    def create_game(req: CreateGameRequest):
        if (req.cutting is None) == (req.family is None):
            raise HTTPException(422, "provide exactly one of 'cutting' or 'family'")
        try:
            if req.cutting is not None:
                cutting = parse_cutting_line(req.cutting)
            else:
                cutting = generate_family(req.family, **req.params)
        except PizzaError as exc:
            raise HTTPException(422, f"bad cutting: {exc}") from exc
        if req.human_side not in ("alice", "bob"):
            raise HTTPException(422, "human_side must be 'alice' or 'bob'")
        human = Player(req.human_side)
        try:
            engine = make_engine(req.engine, cutting, human.other, dict(req.engine_params))
        except PizzaError as exc:
            raise HTTPException(422, f"bad engine: {exc}") from exc
        session = GameSession(
            id=uuid.uuid4().hex[:12],
            cutting=cutting,
            engine_name=req.engine,
            engine=engine,
            human_side=human,
            record=GameRecord(cutting),
            position=Position.initial(cutting.n),
            table=solve_optimal(cutting),
        )
        with session.lock:
            advance_engine(session)
            view = session_view(session)
        with registry_lock:
            sessions[session.id] = session
        return view

    def get_session(game_id: str) -> GameSession:
        with registry_lock:
            session = sessions.get(game_id)
        if session is None:
            raise HTTPException(404, f"no session {game_id}")
        return session

    @app.get("/games/{game_id}")
    def get_game(game_id: str):
        session = get_session(game_id)
        with session.lock:
            return session_view(session)

    @app.post("/games/{game_id}/moves")
    def submit_move(game_id: str, req: MoveRequest):
        session = get_session(game_id)
        with session.lock:
            if session.status == FINISHED:
                raise HTTPException(409, "game already finished")
            if session.position.to_move is not session.human_side:
                raise HTTPException(409, "not the human's turn")
            legal = sorted(legal_moves(session.position))
            if req.index not in legal:
                raise HTTPException(
                    400,
                    {"message": f"illegal move {req.index}", "legal_moves": legal},
                )
            kind = classify_move(session.position, req.index)
            session.record.push(
                Move(session.position.turn_number, session.human_side, req.index, kind)
            )
            session.position = apply_move(session.position, req.index)
            advance_engine(session)
            return session_view(session)

    @app.get("/games/{game_id}/analysis")
    def analyze(game_id: str):
        session = get_session(game_id)
        with session.lock:
            return analysis_view(session)

    ui_dist = Path(__file__).resolve().parent.parent.parent / "frontend" / "dist"
    if ui_dist.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(ui_dist), html=True), name="ui")

    return app
