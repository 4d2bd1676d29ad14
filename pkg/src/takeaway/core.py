"""Immutable position model for the vertex / hyperedge take-away game.

A position is a finite set of named vertices plus a set of hyperedges
(vertex subsets of size >= 2).  A move removes either one vertex (taking
every incident hyperedge with it) or one hyperedge.  The player who
removes the last vertex wins under normal play.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator

MAX_NAME_LEN = 16
ISO_SIZE_BOUND = 10

EMPTY_KEY = b"#"


class PositionError(ValueError):
    """Input violates a position invariant.  ``code`` names the clause."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class ParseError(PositionError):
    """Instance document could not be turned into a position."""


class IllegalMoveError(ValueError):
    code = "illegal-move"


class SizeBoundError(RuntimeError):
    code = "size-bound-exceeded"


@dataclass(frozen=True)
class RemoveVertex:
    name: str


@dataclass(frozen=True)
class RemoveEdge:
    members: frozenset[str]


Move = RemoveVertex | RemoveEdge


@dataclass(frozen=True, eq=False)
class Position:
    """Vertices in declaration order plus an (unordered) edge set.

    Declaration order only matters for serialization and move ordering;
    equality and hashing are by set semantics.
    """

    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Position):
            return NotImplemented
        return (frozenset(self.vertices) == frozenset(other.vertices)
                and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), self.edges))

    @property
    def is_terminal(self) -> bool:
        return not self.vertices

    def __repr__(self) -> str:
        return f"Position({list(self.vertices)}, {[sorted(e) for e in self.sorted_edges()]})"

    def sorted_edges(self) -> list[frozenset[str]]:
        """Edges in the deterministic (alphabetical) move order."""
        return sorted(self.edges, key=lambda e: tuple(sorted(e)))


def _check_name(name: object) -> str:
    if not isinstance(name, str) or not (1 <= len(name) <= MAX_NAME_LEN) \
            or not name.isprintable() or any(c.isspace() for c in name):
        raise PositionError("bad-vertex-name",
                            f"vertex name must be 1-{MAX_NAME_LEN} visible characters: {name!r}")
    return name


def make_position(vertices: Iterable[str], edges: Iterable[Iterable[str]]) -> Position:
    """Validate and build a position.

    Duplicate vertices, duplicate edges, edges smaller than 2 members and
    edges reaching outside the vertex set are all hard errors, never
    silently repaired.
    """
    vs = tuple(_check_name(v) for v in vertices)
    vset = set(vs)
    if len(vset) != len(vs):
        raise PositionError("duplicate-vertex-id", f"duplicate vertex in {vs}")
    built: set[frozenset[str]] = set()
    for raw in edges:
        e = frozenset(raw)
        if len(e) < 2:
            raise PositionError("edge-too-small", f"edge {sorted(e)} has fewer than 2 members")
        if not e <= vset:
            missing = sorted(e - vset)
            raise PositionError("edge-not-subset-of-vertices",
                                f"edge {sorted(e)} uses undeclared vertices {missing}")
        if e in built:
            raise PositionError("duplicate-edge", f"edge {sorted(e)} declared twice")
        built.add(e)
    return Position(vs, frozenset(built))


def legal_moves(p: Position) -> list[Move]:
    """All legal moves: vertices in declaration order, then edges alphabetically."""
    moves: list[Move] = [RemoveVertex(v) for v in p.vertices]
    moves.extend(RemoveEdge(e) for e in p.sorted_edges())
    return moves


def apply_move(p: Position, m: Move) -> Position:
    """Apply one move; raises IllegalMoveError when m is not legal in p."""
    if isinstance(m, RemoveVertex):
        if m.name not in p.vertices:
            raise IllegalMoveError(f"vertex {m.name!r} not in position")
        keep = tuple(v for v in p.vertices if v != m.name)
        return Position(keep, frozenset(e for e in p.edges if m.name not in e))
    if isinstance(m, RemoveEdge):
        if m.members not in p.edges:
            raise IllegalMoveError(f"edge {sorted(m.members)} not in position")
        return Position(p.vertices, p.edges - {m.members})
    raise IllegalMoveError(f"unrecognized move {m!r}")


def canonical_key(p: Position) -> bytes:
    """Deterministic, injective encoding of the labeled position."""
    if p.is_terminal:
        return EMPTY_KEY
    doc = [sorted(p.vertices), [sorted(e) for e in p.sorted_edges()]]
    return json.dumps(doc, separators=(",", ":")).encode()


def iso_canonical_key(p: Position, bound: int = ISO_SIZE_BOUND) -> bytes:
    """Label-independent key: minimum encoding over all vertex relabelings.

    Exhaustive over permutations, so only usable at desk scale (the
    ``bound`` precondition).
    """
    n = len(p.vertices)
    if n > bound:
        raise SizeBoundError(f"{n} vertices exceeds iso bound {bound}")
    if n == 0:
        return EMPTY_KEY
    index = {v: i for i, v in enumerate(sorted(p.vertices))}
    edges = [tuple(index[v] for v in e) for e in p.edges]
    best = None
    for perm in permutations(range(n)):
        relabeled = sorted(tuple(sorted(perm[i] for i in e)) for e in edges)
        if best is None or relabeled < best:
            best = relabeled
    return json.dumps([n, best], separators=(",", ":")).encode()


def relabel(p: Position, mapping: dict[str, str]) -> Position:
    """Rename vertices through a bijective mapping (test / dedup helper)."""
    vs = tuple(mapping[v] for v in p.vertices)
    return make_position(vs, ({mapping[v] for v in e} for e in p.sorted_edges()))


# ---------------------------------------------------------------------------
# Instance document format:
#   {"vertices": ["S","A","B"], "edges": [["A","B"],["S","A","B"]]}
# Serialization is byte-exact: vertices in declaration order, edge members
# in vertex declaration order, edges sorted by their member-name lists.
# ---------------------------------------------------------------------------

def position_from_document(doc: object) -> Position:
    if not isinstance(doc, dict):
        raise ParseError("malformed-document", "top level must be an object")
    extra = set(doc) - {"vertices", "edges"}
    if extra or set(doc) != {"vertices", "edges"}:
        raise ParseError("malformed-document",
                         'document must have exactly the fields "vertices" and "edges"')
    vs, es = doc["vertices"], doc["edges"]
    if not isinstance(vs, list) or not all(isinstance(v, str) for v in vs):
        raise ParseError("malformed-document", '"vertices" must be an array of strings')
    if not isinstance(es, list) or not all(
            isinstance(e, list) and all(isinstance(v, str) for v in e) for e in es):
        raise ParseError("malformed-document", '"edges" must be an array of string arrays')
    declared = set(vs)
    for e in es:
        for v in e:
            if v not in declared:
                raise ParseError("unknown-vertex-name-in-edge",
                                 f"edge {e} references undeclared vertex {v!r}")
    return make_position(vs, es)


def parse_instance(text: str) -> Position:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("malformed-document", f"not valid JSON: {exc}") from exc
    return position_from_document(doc)


def position_to_document(p: Position) -> dict:
    order = {v: i for i, v in enumerate(p.vertices)}
    edge_lists = [sorted(e, key=order.__getitem__) for e in p.edges]
    edge_lists.sort()
    return {"vertices": list(p.vertices), "edges": edge_lists}


def serialize_instance(p: Position) -> str:
    return json.dumps(position_to_document(p), separators=(",", ":"))


def reachable_positions(p: Position) -> Iterator[Position]:
    """Every position reachable from p by legal play, p included, each once."""
    seen = {canonical_key(p)}
    stack = [p]
    while stack:
        cur = stack.pop()
        yield cur
        for m in legal_moves(cur):
            child = apply_move(cur, m)
            key = canonical_key(child)
            if key not in seen:
                seen.add(key)
                stack.append(child)
