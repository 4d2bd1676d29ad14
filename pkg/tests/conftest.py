import pytest

from takeaway.core import make_position


@pytest.fixture
def fig3_first():
    """{S,A,B} with the even edge {A,B} and the 3-edge {S,A,B}."""
    return make_position(["S", "A", "B"], [["A", "B"], ["S", "A", "B"]])


@pytest.fixture
def fig3_second():
    return make_position(
        ["S", "A", "B", "C", "D"],
        [["A", "B", "C", "D"], ["S", "A", "B"], ["S", "B", "C"]])


@pytest.fixture
def fig3_third():
    return make_position(
        ["S", "A", "B", "C", "D", "E", "F"],
        [["A", "B", "C", "D", "E", "F"],
         ["S", "A", "B"], ["S", "B", "C"], ["S", "C", "D"]])


@pytest.fixture
def fig3_fourth():
    return make_position(
        ["S", "A", "B", "C", "D", "E", "F", "G", "H"],
        [["A", "B", "C", "D", "E", "F", "G", "H"],
         ["S", "A", "B"], ["S", "C", "D"], ["S", "E", "F"], ["S", "G", "H"]])


@pytest.fixture
def bc_four_cycle():
    """Conforming {B,C}-only shape: a 4-cycle of 3-edges plus two idle vertices."""
    return make_position(
        ["S", "v1", "v2", "v3", "v4", "v5", "v6"],
        [["v1", "v2", "v3", "v4", "v5", "v6"],
         ["S", "v1", "v2"], ["S", "v2", "v3"], ["S", "v3", "v4"], ["S", "v4", "v1"]])
