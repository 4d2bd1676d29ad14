import itertools

import pytest

from takeaway.core import make_position, relabel
from takeaway.structure import Group, check_lemmas, classify


def test_fig3_first_is_group_i(fig3_first):
    r = classify(fig3_first)
    assert r.group is Group.I
    assert r.conforming
    assert r.special_vertex == "S"
    assert r.subcategory == {"A": "A", "B": "A"}


def test_fig3_second_is_group_v(fig3_second):
    # CatY degrees are A:1, B:2, C:1, D:0, so all three subcategories occur.
    r = classify(fig3_second)
    assert r.group is Group.V
    assert r.subcategory == {"A": "A", "B": "B", "C": "A", "D": "C"}


def test_fig3_third_is_group_v(fig3_third):
    r = classify(fig3_third)
    assert r.group is Group.V
    assert r.special_vertex == "S"
    assert {v for v, c in r.subcategory.items() if c == "A"} == {"A", "D"}
    assert {v for v, c in r.subcategory.items() if c == "B"} == {"B", "C"}
    assert {v for v, c in r.subcategory.items() if c == "C"} == {"E", "F"}


def test_fig3_fourth_is_group_i(fig3_fourth):
    r = classify(fig3_fourth)
    assert r.group is Group.I
    assert len(r.cat_y_edges) == 4


def test_bc_shape_conforms_outside_taxonomy(bc_four_cycle):
    r = classify(bc_four_cycle)
    assert r.conforming
    assert r.group is Group.BC
    assert r.cat_y_degree == {"v1": 2, "v2": 2, "v3": 2, "v4": 2, "v5": 0, "v6": 0}


def test_prior_even_only():
    r = classify(make_position(["A", "B", "C", "D"], [["A", "B", "C", "D"]]))
    assert r.group is Group.PRIOR_EVEN_ONLY
    assert r.conforming


def test_prior_odd_only():
    r = classify(make_position(["S", "a", "b"], [["S", "a", "b"]]))
    assert r.group is Group.PRIOR_ODD_ONLY
    assert r.conforming


def test_group_ii_four_cycle():
    p = make_position(
        ["S", "v1", "v2", "v3", "v4"],
        [["v1", "v2", "v3", "v4"],
         ["S", "v1", "v2"], ["S", "v2", "v3"], ["S", "v3", "v4"], ["S", "v4", "v1"]])
    r = classify(p)
    assert r.group is Group.II
    assert len(r.cat_y_edges) == len(r.cat_x_vertices) == 4


@pytest.mark.parametrize("vertices,edges,expected_violation", [
    # isolated vertex at game start
    (["A", "B", "C"], [["A", "B"]], "uncovered-vertex:C"),
    # two even edges
    (["S", "A", "B", "C", "D"],
     [["A", "B"], ["C", "D"], ["S", "A", "B"]], "multiple-even-edges"),
    # 5-edge is in neither category
    (["A", "B", "C", "D", "E", "F"],
     [["A", "B", "C", "D", "E"], ["E", "F"]], "edge-neither-category"),
    # 3-edge hitting the even edge in all 3 members
    (["A", "B", "C", "D"], [["A", "B", "C", "D"], ["A", "B", "C"]],
     "caty-edge-catx-overlap"),
    # two different outside vertices instead of one S
    (["S", "T", "A", "B", "C", "D"],
     [["A", "B", "C", "D"], ["S", "A", "B"], ["T", "C", "D"]],
     "special-vertex-not-unique"),
    # only 3-edges but a vertex left uncovered
    (["S", "a", "b", "c"], [["S", "a", "b"]], "uncovered-vertex:c"),
    ([], [], "no-edges"),
])
def test_non_conforming(vertices, edges, expected_violation):
    r = classify(make_position(vertices, edges))
    assert r.group is Group.NON_CONFORMING
    assert any(v.startswith(expected_violation) for v in r.violations), r.violations


def test_degree_three_is_a_violation():
    p = make_position(
        ["S", "v1", "v2", "v3", "v4"],
        [["v1", "v2", "v3", "v4"],
         ["S", "v1", "v2"], ["S", "v1", "v3"], ["S", "v1", "v4"]])
    r = classify(p)
    assert "catx-degree-exceeds-2:v1" in r.violations


def test_degree_sum_counting_identity(fig3_third, bc_four_cycle):
    for p in (fig3_third, bc_four_cycle):
        r = classify(p)
        assert sum(r.cat_y_degree.values()) == 2 * len(r.cat_y_edges)


def test_caty_vertices_partition(fig3_third):
    r = classify(fig3_third)
    ab = {v for v, c in r.subcategory.items() if c in "AB"}
    assert r.cat_y_vertices == {r.special_vertex} | ab


def test_classify_label_invariant(fig3_third):
    names = list(fig3_third.vertices)
    for perm in itertools.islice(itertools.permutations(names), 0, 720, 97):
        mapping = dict(zip(names, perm))
        r = classify(relabel(fig3_third, mapping))
        assert r.group is Group.V
        assert r.special_vertex == mapping["S"]


# --- lemma checks ------------------------------------------------------------

def _lemma(results, lemma_id):
    return next(r for r in results if r.lemma_id == lemma_id)


def test_lemma2_and_3_on_group_ii():
    p = make_position(
        ["S", "v1", "v2", "v3", "v4"],
        [["v1", "v2", "v3", "v4"],
         ["S", "v1", "v2"], ["S", "v2", "v3"], ["S", "v3", "v4"], ["S", "v4", "v1"]])
    results = check_lemmas(classify(p))
    assert _lemma(results, 2).holds
    assert _lemma(results, 3).holds


def test_lemma4_probe_flags_bc(bc_four_cycle):
    results = check_lemmas(classify(bc_four_cycle))
    assert not _lemma(results, 4).holds
    assert _lemma(results, 1).holds


def test_lemma5_on_group_iii():
    p = make_position(
        ["S", "v1", "v2", "v3", "v4"],
        [["v1", "v2", "v3", "v4"],
         ["S", "v1", "v2"], ["S", "v2", "v3"], ["S", "v3", "v4"]])
    r = classify(p)
    assert r.group is Group.III
    assert _lemma(check_lemmas(r), 5).holds


def test_check_lemmas_precondition():
    r = classify(make_position(["A", "B"], [["A", "B"]]))  # PriorEvenOnly
    with pytest.raises(ValueError, match="precondition"):
        check_lemmas(r)
