"""Exhaustive instance generation and oracle-vs-prediction verification.

Instances are generated in labeled form: vertex S plus v1..v{2m}, the
even edge {v1..v{2m}}, and every nonempty set of 3-edges {S, vi, vj}
where no vi sits in more than two of them.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .closedform import Prediction, predict
from .core import Position, iso_canonical_key, make_position, serialize_instance
from .grundy import TranspositionTable, grundy
from .structure import Group, classify

CSV_COLUMNS = ["instance_id", "group", "v_catx", "e_caty",
               "oracle", "predicted", "source", "match"]


@dataclass(frozen=True)
class EnumerationBounds:
    max_half_size: int
    iso_dedup: bool = False

    def __post_init__(self):
        if self.max_half_size < 1:
            raise ValueError("max_half_size must be >= 1")


@dataclass
class VerificationRecord:
    instance_id: str
    instance: str  # serialized document
    group: str
    v_catx: int
    e_caty: int
    oracle: int
    predicted: int | None
    source: str
    match: bool | None  # None when no prediction exists

    def to_dict(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "instance": self.instance,
            "group": self.group,
            "v_catx": self.v_catx,
            "e_caty": self.e_caty,
            "oracle": self.oracle,
            "predicted": self.predicted,
            "source": self.source,
            "match": self.match,
        }


def _degree_bounded_pair_sets(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Nonempty sets of vertex pairs over range(n) with every vertex in <= 2.

    Lexicographic order over the pair-index sequences, so enumeration order
    is stable across runs.
    """
    pairs = list(combinations(range(n), 2))
    degree = [0] * n
    chosen: list[tuple[int, int]] = []

    def rec(start: int) -> Iterator[tuple[tuple[int, int], ...]]:
        for j in range(start, len(pairs)):
            a, b = pairs[j]
            if degree[a] < 2 and degree[b] < 2:
                degree[a] += 1
                degree[b] += 1
                chosen.append(pairs[j])
                yield tuple(chosen)
                yield from rec(j + 1)
                degree[a] -= 1
                degree[b] -= 1
                chosen.pop()

    yield from rec(0)


def enumerate_instances(bounds: EnumerationBounds) -> Iterator[Position]:
    seen_iso: set[bytes] = set()
    for m in range(1, bounds.max_half_size + 1):
        n = 2 * m
        names = [f"v{i + 1}" for i in range(n)]
        vertices = ["S"] + names
        cat_x = list(names)
        for pair_set in _degree_bounded_pair_sets(n):
            edges = [cat_x] + [["S", names[a], names[b]] for a, b in pair_set]
            p = make_position(vertices, edges)
            if bounds.iso_dedup:
                key = iso_canonical_key(p)
                if key in seen_iso:
                    continue
                seen_iso.add(key)
            yield p


def verify(bounds: EnumerationBounds,
           table: TranspositionTable | None = None,
           ) -> tuple[list[VerificationRecord], dict]:
    """Run oracle vs closed form over the whole enumerated universe.

    A mismatch never aborts the run; it is recorded (and the CLI serializes
    it to a standalone instance file) so counterexamples stay auditable.
    """
    if table is None:
        table = TranspositionTable()
    records: list[VerificationRecord] = []
    summary: dict[str, dict[str, int]] = {}
    for idx, p in enumerate(enumerate_instances(bounds)):
        report = classify(p)
        prediction: Prediction = predict(report)
        oracle = grundy(p, table).value
        if prediction.value is None:
            match = None
        else:
            match = oracle == prediction.value
        rec = VerificationRecord(
            instance_id=f"i{idx:06d}",
            instance=serialize_instance(p),
            group=report.group.value,
            v_catx=len(report.cat_x_vertices),
            e_caty=len(report.cat_y_edges),
            oracle=oracle,
            predicted=prediction.value,
            source=prediction.source,
            match=match,
        )
        records.append(rec)
        parity = "even" if rec.e_caty % 2 == 0 else "odd"
        bucket = summary.setdefault(f"{rec.group}/{parity}",
                                    {"match": 0, "mismatch": 0, "no_prediction": 0})
        bucket["match" if match else "no_prediction" if match is None else "mismatch"] += 1
    return records, summary


def mismatches(records: list[VerificationRecord]) -> list[VerificationRecord]:
    return [r for r in records if r.match is False]


def emit_report(records: list[VerificationRecord], fmt: str = "csv") -> str:
    """Byte-deterministic report: CSV with fixed columns, or a JSON array."""
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow([
                r.instance_id, r.group, r.v_catx, r.e_caty, r.oracle,
                "" if r.predicted is None else r.predicted,
                r.source,
                "no-prediction" if r.match is None else str(r.match).lower(),
            ])
        return out.getvalue()
    if fmt == "structured":
        return json.dumps([r.to_dict() for r in records], indent=2) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")
