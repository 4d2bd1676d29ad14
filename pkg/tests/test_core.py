import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from takeaway.core import (IllegalMoveError, ParseError, PositionError,
                           RemoveEdge, RemoveVertex, apply_move, canonical_key,
                           iso_canonical_key, legal_moves, make_position,
                           parse_instance, position_to_document, relabel,
                           serialize_instance)


# --- position construction -------------------------------------------------

def test_make_position_valid(fig3_first):
    assert set(fig3_first.vertices) == {"S", "A", "B"}
    assert fig3_first.edges == {frozenset("AB"), frozenset("SAB")}


def test_empty_position_is_terminal():
    p = make_position([], [])
    assert p.is_terminal
    assert legal_moves(p) == []


@pytest.mark.parametrize("vertices,edges,code", [
    (["A"], [["A", "B"]], "edge-not-subset-of-vertices"),
    (["A", "B"], [["A", "B"], ["B", "A"]], "duplicate-edge"),
    (["A", "B"], [["A"]], "edge-too-small"),
    (["A", "A"], [], "duplicate-vertex-id"),
    ([""], [], "bad-vertex-name"),
    (["x" * 17], [], "bad-vertex-name"),
])
def test_make_position_errors(vertices, edges, code):
    with pytest.raises(PositionError) as exc:
        make_position(vertices, edges)
    assert exc.value.code == code


# --- moves -------------------------------------------------------------------

def test_legal_move_count(fig3_first):
    moves = legal_moves(fig3_first)
    assert len(moves) == 5
    # Vertices in declaration order first, then edges alphabetically.
    assert moves[:3] == [RemoveVertex("S"), RemoveVertex("A"), RemoveVertex("B")]
    assert moves[3:] == [RemoveEdge(frozenset("AB")), RemoveEdge(frozenset("SAB"))]


def test_vertex_only_position_moves():
    p = make_position(["A", "B"], [])
    assert legal_moves(p) == [RemoveVertex("A"), RemoveVertex("B")]


def test_apply_remove_vertex_takes_incident_edges(fig3_first):
    after = apply_move(fig3_first, RemoveVertex("A"))
    assert set(after.vertices) == {"S", "B"}
    assert after.edges == frozenset()


def test_apply_remove_special_vertex(fig3_first):
    after = apply_move(fig3_first, RemoveVertex("S"))
    assert set(after.vertices) == {"A", "B"}
    assert after.edges == {frozenset("AB")}


def test_apply_remove_edge_keeps_vertices(fig3_first):
    after = apply_move(fig3_first, RemoveEdge(frozenset("AB")))
    assert set(after.vertices) == {"S", "A", "B"}
    assert after.edges == {frozenset("SAB")}


def test_illegal_moves_raise(fig3_first):
    with pytest.raises(IllegalMoveError):
        apply_move(fig3_first, RemoveVertex("Z"))
    with pytest.raises(IllegalMoveError):
        apply_move(fig3_first, RemoveEdge(frozenset({"S", "A"})))


# --- canonical keys ----------------------------------------------------------

def test_canonical_key_order_independent():
    a = make_position(["A", "B", "C"], [["B", "C"], ["A", "B", "C"]])
    b = make_position(["C", "B", "A"], [["A", "B", "C"], ["C", "B"]])
    assert canonical_key(a) == canonical_key(b)
    assert a == b


def test_canonical_key_is_labeled():
    assert canonical_key(make_position(["A"], [])) != canonical_key(make_position(["B"], []))


def test_canonical_key_empty_sentinel():
    assert canonical_key(make_position([], [])) == b"#"


def test_iso_key_relabel_invariant():
    a = make_position(["A", "B"], [["A", "B"]])
    b = make_position(["X", "Y"], [["X", "Y"]])
    assert iso_canonical_key(a) == iso_canonical_key(b)
    c = make_position(["A", "B"], [])
    assert iso_canonical_key(a) != iso_canonical_key(c)


def test_iso_key_all_permutations(fig3_first):
    import itertools
    keys = set()
    for perm in itertools.permutations("SAB"):
        mapping = dict(zip("SAB", perm))
        keys.add(iso_canonical_key(relabel(fig3_first, mapping)))
    assert len(keys) == 1


# --- serialization -----------------------------------------------------------

def test_parse_fig3_first(fig3_first):
    text = '{"vertices":["S","A","B"],"edges":[["A","B"],["S","A","B"]]}'
    assert parse_instance(text) == fig3_first
    assert serialize_instance(fig3_first) == text


def test_parse_empty():
    assert parse_instance('{"vertices":[],"edges":[]}').is_terminal


@pytest.mark.parametrize("text,code", [
    ("not json", "malformed-document"),
    ('{"vertices":["A"]}', "malformed-document"),
    ('{"vertices":["A","B"],"edges":[["A","C"]]}', "unknown-vertex-name-in-edge"),
    ('{"vertices":[1],"edges":[]}', "malformed-document"),
])
def test_parse_errors(text, code):
    with pytest.raises(ParseError) as exc:
        parse_instance(text)
    assert exc.value.code == code


def test_serialize_uses_declaration_order():
    p = make_position(["B", "A", "S"], [["S", "A", "B"], ["A", "B"]])
    doc = position_to_document(p)
    assert doc["vertices"] == ["B", "A", "S"]
    # Members in declaration order, edges sorted by their name lists.
    assert doc["edges"] == [["B", "A"], ["B", "A", "S"]]


# --- property tests ----------------------------------------------------------

@st.composite
def positions(draw, max_vertices=5):
    n = draw(st.integers(min_value=0, max_value=max_vertices))
    names = [f"n{i}" for i in range(n)]
    candidates = []
    if n >= 2:
        from itertools import combinations
        for size in (2, 3, 4):
            candidates.extend(frozenset(c) for c in combinations(names, size))
    edges = draw(st.lists(st.sampled_from(candidates), unique=True, max_size=6)
                 if candidates else st.just([]))
    return make_position(names, edges)


@given(positions())
def test_move_count_property(p):
    assert len(legal_moves(p)) == len(p.vertices) + len(p.edges)


@given(positions())
def test_progress_property(p):
    before = len(p.vertices) + len(p.edges)
    for m in legal_moves(p):
        after = apply_move(p, m)
        assert len(after.vertices) + len(after.edges) < before


@given(positions())
def test_vertex_removal_closure(p):
    for m in legal_moves(p):
        after = apply_move(p, m)
        if isinstance(m, RemoveVertex):
            assert all(m.name not in e for e in after.edges)
        assert all(e <= set(after.vertices) for e in after.edges)


@given(positions())
def test_serialize_parse_round_trip(p):
    assert parse_instance(serialize_instance(p)) == p
    # Canonical documents are a serialization fixed point.
    text = serialize_instance(p)
    assert serialize_instance(parse_instance(text)) == text


@settings(max_examples=30)
@given(positions(max_vertices=4), st.randoms())
def test_iso_key_random_relabel(p, rng):
    names = list(p.vertices)
    shuffled = names[:]
    rng.shuffle(shuffled)
    q = relabel(p, dict(zip(names, shuffled)))
    assert iso_canonical_key(p) == iso_canonical_key(q)
