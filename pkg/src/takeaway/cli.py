"""Command-line entry points.

Exit codes: 0 success / conforming, 1 parse or usage error,
2 non-conforming instance (analyze), 3 size bound exceeded (solve).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .closedform import predict
from .core import (ParseError, PositionError, SizeBoundError, parse_instance,
                   serialize_instance)
from .enumeration import (EnumerationBounds, emit_report, enumerate_instances,
                          mismatches, verify)
from .grundy import TranspositionTable, grundy
from .structure import Group, check_lemmas, classify


def _load_position(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError("io-failure", f"cannot read {path}: {exc}") from exc
    return parse_instance(text)


def _move_label(move) -> str:
    from .core import RemoveVertex
    if isinstance(move, RemoveVertex):
        return f"remove vertex {move.name}"
    return f"remove edge {{{','.join(sorted(move.members))}}}"


def cmd_analyze(args) -> int:
    try:
        position = _load_position(args.file)
    except (ParseError, PositionError) as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 1
    report = classify(position)
    prediction = predict(report)

    if args.json:
        doc = report.to_dict()
        doc["prediction"] = {"value": prediction.value, "source": prediction.source}
        print(json.dumps(doc, indent=2))
    else:
        print(f"group: {report.group.value}")
        if report.special_vertex is not None:
            print(f"special vertex: {report.special_vertex}")
        if report.subcategory:
            by_cat: dict[str, list[str]] = {}
            for v, c in sorted(report.subcategory.items()):
                by_cat.setdefault(c, []).append(v)
            for c in "ABC":
                if c in by_cat:
                    print(f"subcategory {c}: {', '.join(by_cat[c])}")
        for violation in report.violations:
            print(f"violation: {violation}")
        if report.group in {Group.I, Group.II, Group.III, Group.IV, Group.V, Group.BC}:
            for lemma in check_lemmas(report):
                status = "holds" if lemma.holds else "FAILS"
                print(f"lemma {lemma.lemma_id}: {status} ({lemma.witness})")
        if prediction.value is None:
            print(f"predicted Grundy value: none ({prediction.source})")
        else:
            print(f"predicted Grundy value: {prediction.value} ({prediction.source})")

    if args.render:
        from .figures import render_position
        render_position(position, args.render, report)
        print(f"figure written to {args.render}")
    return 0 if report.conforming else 2


def cmd_solve(args) -> int:
    try:
        position = _load_position(args.file)
    except (ParseError, PositionError) as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 1
    table = TranspositionTable()
    try:
        result = grundy(position, table, iso_reduce=args.iso)
    except SizeBoundError as exc:
        print(f"error [size-bound-exceeded]: {exc}", file=sys.stderr)
        return 3
    print(f"Grundy value: {result.value}")
    for move, value in result.options:
        print(f"  {_move_label(move)} -> {value}")
    if result.winning_moves:
        print("winning moves: " + "; ".join(_move_label(m) for m in result.winning_moves))
    else:
        print("winning moves: none (losing position)")
    if args.stats:
        stats = table.stats()
        print(f"table: {stats['entries']} entries, "
              f"{stats['hits']} hits, {stats['misses']} misses")
    return 0


def cmd_enumerate(args) -> int:
    bounds = EnumerationBounds(args.max_half_size, iso_dedup=args.iso_dedup)
    count = 0
    for position in enumerate_instances(bounds):
        count += 1
        if not args.count_only:
            print(serialize_instance(position))
    if args.count_only:
        print(count)
    return 0


def cmd_verify(args) -> int:
    bounds = EnumerationBounds(args.max_half_size, iso_dedup=args.iso_dedup)
    records, summary = verify(bounds)
    shown = mismatches(records) if args.mismatches_only else records

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.csv").write_text(emit_report(shown, "csv"))
    (out / "report.json").write_text(emit_report(shown, "structured"))

    bad = mismatches(records)
    mismatch_dir = out / "mismatches"
    if bad:
        mismatch_dir.mkdir(exist_ok=True)
        for rec in bad:
            (mismatch_dir / f"{rec.instance_id}.json").write_text(rec.instance + "\n")

    from .figures import render_verification_summary
    render_verification_summary(summary, str(out / "summary.png"))

    print(f"{'bucket':<22}{'match':>8}{'mismatch':>10}{'no-pred':>9}")
    for bucket in sorted(summary):
        counts = summary[bucket]
        print(f"{bucket:<22}{counts['match']:>8}{counts['mismatch']:>10}"
              f"{counts['no_prediction']:>9}")
    total = len(records)
    print(f"{total} instances verified, {len(bad)} mismatches"
          + (f" (serialized under {mismatch_dir})" if bad else ""))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app
    static = args.static if args.static and Path(args.static).is_dir() else None
    app = create_app(auto_reply=not args.no_auto_reply, static_dir=static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="takeaway",
        description="Take-away game engine on hypergraphs: analyze, solve, "
                    "enumerate, verify, and play.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify an instance file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--render", metavar="PNG", help="draw the instance to a file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("solve", help="exact Grundy value and winning moves")
    p.add_argument("file")
    p.add_argument("--iso", action="store_true",
                   help="memoize up to vertex relabeling")
    p.add_argument("--stats", action="store_true",
                   help="print transposition table statistics")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("enumerate", help="list all conforming instances")
    p.add_argument("--max-half-size", type=int, required=True, metavar="M")
    p.add_argument("--iso-dedup", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustive oracle vs closed-form check")
    p.add_argument("--max-half-size", type=int, required=True, metavar="M")
    p.add_argument("--out", required=True, metavar="DIR")
    p.add_argument("--iso-dedup", action="store_true")
    p.add_argument("--mismatches-only", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP play service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--no-auto-reply", action="store_true",
                   help="hot-seat mode: the engine does not answer moves")
    p.add_argument("--static", metavar="DIR", default="frontend/dist",
                   help="directory with the browser UI bundle")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
