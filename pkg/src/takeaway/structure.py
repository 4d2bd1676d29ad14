"""Structural classification of initial instances.

Conforming instances have exactly one even-size hyperedge ("category X")
plus at least one 3-vertex hyperedge ("category Y"), a special vertex S
in every 3-edge and not in the even edge, and every X-vertex in 0, 1 or 2
of the 3-edges.  X-vertices fall into subcategory A (degree 1 in the
3-edges), B (degree 2) or C (degree 0), and the set of subcategories
present determines the group.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .core import Position


class Group(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    BC = "BC"
    PRIOR_EVEN_ONLY = "PriorEvenOnly"
    PRIOR_ODD_ONLY = "PriorOddOnly"
    NON_CONFORMING = "NonConforming"


_GROUP_BY_SUBCATS = {
    frozenset("A"): Group.I,
    frozenset("B"): Group.II,
    frozenset("AB"): Group.III,
    frozenset("AC"): Group.IV,
    frozenset("ABC"): Group.V,
    frozenset("BC"): Group.BC,
}


@dataclass
class StructureReport:
    cat_x_edge: frozenset[str] | None
    cat_x_vertices: frozenset[str]
    cat_y_edges: frozenset[frozenset[str]]
    cat_y_vertices: frozenset[str]
    special_vertex: str | None
    subcategory: dict[str, str]
    cat_y_degree: dict[str, int]
    group: Group
    violations: list[str]
    n_vertices: int
    n_edges: int

    @property
    def conforming(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "group": self.group.value,
            "special_vertex": self.special_vertex,
            "cat_x_edge": sorted(self.cat_x_edge) if self.cat_x_edge else None,
            "cat_y_edges": sorted(sorted(e) for e in self.cat_y_edges),
            "subcategories": dict(sorted(self.subcategory.items())),
            "cat_y_degree": dict(sorted(self.cat_y_degree.items())),
            "n_vertices": self.n_vertices,
            "n_edges": self.n_edges,
            "violations": list(self.violations),
        }


@dataclass
class LemmaResult:
    lemma_id: int
    holds: bool
    witness: str


def _non_conforming(p: Position, violations: list[str], *,
                    cat_x_edge=None, cat_y_edges=frozenset()) -> StructureReport:
    return StructureReport(
        cat_x_edge=cat_x_edge,
        cat_x_vertices=frozenset(cat_x_edge) if cat_x_edge else frozenset(),
        cat_y_edges=frozenset(cat_y_edges),
        cat_y_vertices=frozenset().union(*cat_y_edges) if cat_y_edges else frozenset(),
        special_vertex=None,
        subcategory={},
        cat_y_degree={},
        group=Group.NON_CONFORMING,
        violations=violations,
        n_vertices=len(p.vertices),
        n_edges=len(p.edges),
    )


def classify(p: Position) -> StructureReport:
    """Full structural report; non-conformance is data, never an exception."""
    violations: list[str] = []

    covered = set().union(*p.edges) if p.edges else set()
    uncovered = sorted(set(p.vertices) - covered)
    for v in uncovered:
        violations.append(f"uncovered-vertex:{v}")

    even_edges = sorted((e for e in p.edges if len(e) % 2 == 0),
                        key=lambda e: tuple(sorted(e)))
    three_edges = frozenset(e for e in p.edges if len(e) == 3)
    stray = sorted((e for e in p.edges if len(e) % 2 == 1 and len(e) != 3),
                   key=lambda e: tuple(sorted(e)))
    for e in stray:
        violations.append(f"edge-neither-category:{sorted(e)}")

    if not p.edges:
        violations.append("no-edges")
        return _non_conforming(p, violations)

    # Pure prior-work shapes: evenly uniform, or 3-uniform, covering everything.
    if not three_edges:
        if not stray and not uncovered:
            report = _non_conforming(p, [])
            report.group = Group.PRIOR_EVEN_ONLY
            report.cat_x_edge = even_edges[0] if len(even_edges) == 1 else None
            if report.cat_x_edge is not None:
                report.cat_x_vertices = frozenset(report.cat_x_edge)
            return report
        violations.append("no-category-y-edge")
        return _non_conforming(p, violations)
    if not even_edges:
        if not stray and not uncovered:
            report = _non_conforming(p, [])
            report.group = Group.PRIOR_ODD_ONLY
            report.cat_y_edges = three_edges
            report.cat_y_vertices = frozenset().union(*three_edges)
            return report
        violations.append("no-category-x-edge")
        return _non_conforming(p, violations, cat_y_edges=three_edges)

    if len(even_edges) > 1:
        violations.append("multiple-even-edges")
        return _non_conforming(p, violations, cat_y_edges=three_edges)

    cat_x_edge = even_edges[0]
    cat_x = frozenset(cat_x_edge)

    # Each 3-edge must hit the X-edge in exactly 2 vertices; the third
    # member must be one common vertex S outside the X-edge.
    specials: set[str] = set()
    for e in sorted(three_edges, key=lambda e: tuple(sorted(e))):
        inside = e & cat_x
        if len(inside) != 2:
            violations.append(f"caty-edge-catx-overlap:{sorted(e)}")
        else:
            specials |= e - cat_x
    special = None
    if len(specials) == 1:
        special = next(iter(specials))
        if not all(special in e for e in three_edges):
            violations.append("special-vertex-not-in-all-caty-edges")
            special = None
    elif specials:
        violations.append(f"special-vertex-not-unique:{sorted(specials)}")

    degree = {v: sum(v in e for e in three_edges) for v in sorted(cat_x)}
    for v, d in degree.items():
        if d > 2:
            violations.append(f"catx-degree-exceeds-2:{v}")

    if violations:
        return _non_conforming(p, violations,
                               cat_x_edge=cat_x_edge, cat_y_edges=three_edges)

    subcat = {v: {0: "C", 1: "A", 2: "B"}[d] for v, d in degree.items()}
    group = _GROUP_BY_SUBCATS.get(frozenset(subcat.values()), Group.NON_CONFORMING)
    if group is Group.NON_CONFORMING:  # unreachable while CatY is nonempty
        violations.append("unclassifiable-subcategory-set")

    return StructureReport(
        cat_x_edge=cat_x_edge,
        cat_x_vertices=cat_x,
        cat_y_edges=three_edges,
        cat_y_vertices=frozenset().union(*three_edges),
        special_vertex=special,
        subcategory=subcat,
        cat_y_degree=degree,
        group=group,
        violations=violations,
        n_vertices=len(p.vertices),
        n_edges=len(p.edges),
    )


def check_lemmas(r: StructureReport) -> list[LemmaResult]:
    """Evaluate the structural lemma conclusions on one conforming instance.

    Lemmas whose hypothesis does not cover this instance report holds=True
    with a witness noting that.  Lemmas 1 and 4 are counterexample probes:
    holds is False exactly when this instance is a counterexample shape.
    """
    if r.group not in {Group.I, Group.II, Group.III, Group.IV, Group.V, Group.BC}:
        raise ValueError(f"precondition-violated: group {r.group.value} has no subcategories")

    subcats = frozenset(r.subcategory.values())
    ey, vx = len(r.cat_y_edges), len(r.cat_x_vertices)
    results = [
        LemmaResult(1, subcats != {"C"},
                    "all-C instance" if subcats == {"C"} else "not an all-C instance"),
    ]
    if r.group is Group.II:
        results.append(LemmaResult(2, ey == vx, f"|E(CatY)|={ey}, |V(CatX)|={vx}"))
        results.append(LemmaResult(3, ey >= 4, f"|E(CatY)|={ey}"))
    else:
        results.append(LemmaResult(2, True, "hypothesis not applicable (not group II)"))
        results.append(LemmaResult(3, True, "hypothesis not applicable (not group II)"))
    results.append(LemmaResult(
        4, r.group is not Group.BC,
        "conforming {B,C}-only instance exists" if r.group is Group.BC
        else "not a {B,C}-only instance"))
    if r.group is Group.III:
        results.append(LemmaResult(5, ey >= 3, f"|E(CatY)|={ey}"))
    else:
        results.append(LemmaResult(5, True, "hypothesis not applicable (not group III)"))
    return results
