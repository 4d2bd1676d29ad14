"""Exact Grundy values by memoized game-tree search, plus move advice.

This is the ground-truth oracle: no closed forms, no heuristics, just the
Sprague-Grundy recursion over all options with a transposition table.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import (Move, Position, SizeBoundError, apply_move, canonical_key,
                   iso_canonical_key, legal_moves)

DEFAULT_VERTEX_BOUND = 16
VALUE_LIMIT = 255  # values fit 8 bits at desk scale; hitting this is a bug


def mex(values) -> int:
    """Minimum excludant: smallest non-negative integer absent from values."""
    present = set(values)
    i = 0
    while i in present:
        i += 1
    return i


class TranspositionTable:
    """Memo from canonical position keys to Grundy values.

    Writes are idempotent: re-deriving a stored key with a different value
    is a hard error (it would mean the search is non-deterministic).
    """

    def __init__(self) -> None:
        self._table: dict[bytes, int] = {}
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._table)

    def get(self, key: bytes) -> int | None:
        value = self._table.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, key: bytes, value: int) -> None:
        old = self._table.setdefault(key, value)
        if old != value:
            raise RuntimeError(f"transposition table conflict at {key!r}: {old} vs {value}")

    def stats(self) -> dict[str, int]:
        return {"entries": len(self._table), "hits": self.hits, "misses": self.misses}


@dataclass
class GrundyResult:
    value: int
    options: list[tuple[Move, int]]
    winning_moves: list[Move] = field(default_factory=list)


def _key(p: Position, iso_reduce: bool) -> bytes:
    return iso_canonical_key(p) if iso_reduce else canonical_key(p)


def _value(p: Position, table: TranspositionTable, iso_reduce: bool) -> int:
    key = _key(p, iso_reduce)
    cached = table.get(key)
    if cached is not None:
        return cached
    # Depth is bounded by |V| + |E|, so plain recursion is safe here.
    value = mex(_value(apply_move(p, m), table, iso_reduce) for m in legal_moves(p))
    if value > VALUE_LIMIT:
        raise RuntimeError(f"Grundy value {value} exceeds the 8-bit storage contract")
    table.put(key, value)
    return value


def grundy(p: Position, table: TranspositionTable | None = None, *,
           iso_reduce: bool = False,
           vertex_bound: int = DEFAULT_VERTEX_BOUND) -> GrundyResult:
    """Grundy value of p with per-option values and the winning moves."""
    if len(p.vertices) > vertex_bound:
        raise SizeBoundError(f"{len(p.vertices)} vertices exceeds bound {vertex_bound}")
    if table is None:
        table = TranspositionTable()
    options = [(m, _value(apply_move(p, m), table, iso_reduce)) for m in legal_moves(p)]
    value = mex(v for _, v in options)
    table.put(_key(p, iso_reduce), value)
    return GrundyResult(value, options, [m for m, v in options if v == 0])


def winning_moves(p: Position, table: TranspositionTable | None = None) -> list[Move]:
    """Moves to a Grundy-0 position, in deterministic move order."""
    return grundy(p, table).winning_moves


def engine_move(p: Position, table: TranspositionTable | None = None) -> Move | None:
    """Perfect-play policy: first winning move, else first legal move."""
    result = grundy(p, table)
    if result.winning_moves:
        return result.winning_moves[0]
    moves = legal_moves(p)
    return moves[0] if moves else None


def is_losing(p: Position, memo: dict[bytes, bool] | None = None) -> bool:
    """Early-exit win/loss mode: True iff the player to move loses (g = 0).

    Distinct from the full recursion (it stops at the first losing child)
    but must always agree with grundy(p).value == 0.
    """
    if memo is None:
        memo = {}
    key = canonical_key(p)
    cached = memo.get(key)
    if cached is not None:
        return cached
    losing = not any(is_losing(apply_move(p, m), memo) for m in legal_moves(p))
    memo[key] = losing
    return losing
