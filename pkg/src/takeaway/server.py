"""HTTP game service: play the take-away game against the engine.

Sessions live in memory only.  The engine replies with the first winning
move in deterministic move order (or the first legal move from a lost
position) whenever auto-reply is on.
"""
from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .closedform import predict
from .core import (IllegalMoveError, Move, ParseError, Position, PositionError,
                   RemoveEdge, RemoveVertex, SizeBoundError, apply_move,
                   position_from_document, position_to_document)
from .grundy import GrundyResult, TranspositionTable, engine_move, grundy
from .structure import classify


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def move_to_wire(m: Move) -> dict:
    if isinstance(m, RemoveVertex):
        return {"type": "vertex", "name": m.name}
    return {"type": "edge", "members": sorted(m.members)}


def wire_to_move(body: object) -> Move:
    if isinstance(body, dict):
        if body.get("type") == "vertex" and isinstance(body.get("name"), str):
            return RemoveVertex(body["name"])
        if body.get("type") == "edge" and isinstance(body.get("members"), list) \
                and all(isinstance(v, str) for v in body["members"]):
            return RemoveEdge(frozenset(body["members"]))
    raise ApiError(400, "malformed", f"unrecognized move body: {body!r}")


@dataclass
class GameSession:
    session_id: str
    position: Position
    auto_reply: bool
    history: list[dict] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def to_move(self) -> str | None:
        if self.position.is_terminal:
            return None
        return "human" if len(self.history) % 2 == 0 else "engine"

    @property
    def winner(self) -> str | None:
        if not self.position.is_terminal or not self.history:
            return None
        return self.history[-1]["mover"]


def create_app(auto_reply: bool = True, static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="take-away game service")
    sessions: dict[str, GameSession] = {}
    store_lock = threading.Lock()
    table = TranspositionTable()

    @app.exception_handler(ApiError)
    async def _api_error(_: Request, exc: ApiError) -> JSONResponse:
        return JSONResponse(status_code=exc.status,
                            content={"error_code": exc.code, "message": exc.message})

    def grundy_payload(p: Position) -> dict:
        try:
            result: GrundyResult = grundy(p, table)
        except SizeBoundError as exc:
            raise ApiError(422, "size_bound", str(exc)) from exc
        return {
            "value": result.value,
            "options": [{"move": move_to_wire(m), "value": v}
                        for m, v in result.options],
            "winning_moves": [move_to_wire(m) for m in result.winning_moves],
        }

    def get_session(session_id: str) -> GameSession:
        session = sessions.get(session_id)
        if session is None:
            raise ApiError(404, "unknown_session", f"no session {session_id!r}")
        return session

    def state_payload(session: GameSession) -> dict:
        return {
            "session_id": session.session_id,
            "position": position_to_document(session.position),
            "history": list(session.history),
            "grundy": grundy_payload(session.position),
            "to_move": session.to_move,
            "game_over": session.position.is_terminal,
            "winner": session.winner,
        }

    @app.post("/api/games")
    async def new_game(request: Request) -> dict:
        try:
            body = await request.json()
        except Exception as exc:
            raise ApiError(400, "malformed", "request body is not valid JSON") from exc
        if not isinstance(body, dict) or "instance" not in body:
            raise ApiError(400, "malformed", 'body must be {"instance": {...}}')
        try:
            position = position_from_document(body["instance"])
        except (ParseError, PositionError) as exc:
            raise ApiError(400, "malformed", str(exc)) from exc
        report = classify(position)
        session = GameSession(session_id=uuid.uuid4().hex,
                              position=position, auto_reply=auto_reply)
        payload = {
            "session_id": session.session_id,
            "position": position_to_document(position),
            "structure_report": report.to_dict(),
            "prediction": {"value": predict(report).value,
                           "source": predict(report).source},
            "grundy": grundy_payload(position),
            "to_move": session.to_move,
        }
        with store_lock:
            sessions[session.session_id] = session
        return payload

    @app.get("/api/games/{session_id}")
    async def game_state(session_id: str) -> dict:
        return state_payload(get_session(session_id))

    @app.post("/api/games/{session_id}/moves")
    async def submit_move(session_id: str, request: Request) -> dict:
        session = get_session(session_id)
        try:
            body = await request.json()
        except Exception as exc:
            raise ApiError(400, "malformed", "request body is not valid JSON") from exc
        move = wire_to_move(body)
        with session.lock:
            if session.position.is_terminal:
                raise ApiError(409, "illegal_move", "the game is already over")
            mover = session.to_move or "human"
            try:
                session.position = apply_move(session.position, move)
            except IllegalMoveError as exc:
                raise ApiError(409, "illegal_move", str(exc)) from exc
            session.history.append({"mover": mover, "move": move_to_wire(move)})
            reply_wire = None
            if session.auto_reply and not session.position.is_terminal:
                reply = engine_move(session.position, table)
                session.position = apply_move(session.position, reply)
                reply_wire = move_to_wire(reply)
                session.history.append({"mover": "engine", "move": reply_wire})
            return {
                "move": move_to_wire(move),
                "engine_reply": reply_wire,
                "position": position_to_document(session.position),
                "grundy": grundy_payload(session.position),
                "to_move": session.to_move,
                "game_over": session.position.is_terminal,
                "winner": session.winner,
            }

    @app.get("/api/games/{session_id}/advice")
    async def advice(session_id: str) -> dict:
        session = get_session(session_id)
        payload = grundy_payload(session.position)
        return {"value": payload["value"], "winning_moves": payload["winning_moves"]}

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
