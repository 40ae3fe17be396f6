"""Command-line front end: generate constructions, verify point sets,
render SVG figures and report grid statistics."""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import construct, io, verify
from .errors import DuplicatePoint, DuplicateX, EsgridError, NotGeneralPosition
from .pointset import Kind, PointSet, bounding_box

_KINDS = {
    "pr": Kind.PR,
    "skl": Kind.SKL_BASELINE,
    "skl-opt": Kind.SKL_OPTIMIZED,
    "es": Kind.ES_BASELINE,
    "es-opt": Kind.ES_OPTIMIZED,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="esgrid",
        description="Extremal point configurations without large convex "
                    "polygons, on small integer grids.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a construction")
    gen.add_argument("--kind", required=True, choices=sorted(_KINDS))
    gen.add_argument("--r", type=int, help="level (kind pr)")
    gen.add_argument("--k", type=int, help="cup bound parameter (kind skl*)")
    gen.add_argument("--l", type=int, help="cap bound parameter (kind skl*)")
    gen.add_argument("--t", type=int, help="polygon bound parameter (kind es*)")
    gen.add_argument("--no-unit-sep", action="store_true",
                     help="disable unit separation at the outermost split")
    gen.add_argument("--format", choices=["txt", "json"], default="txt")
    gen.add_argument("--out", type=Path)

    ver = sub.add_parser("verify", help="verify a point set file")
    ver.add_argument("file", type=Path)
    ver.add_argument("--empty", action="store_true",
                     help="also compute the maximum empty convex subset")
    ver.add_argument("--oracle", action="store_true",
                     help="cross-check with the brute-force oracle (n <= 20)")

    ren = sub.add_parser("render", help="render a point set file as SVG")
    ren.add_argument("file", type=Path)
    ren.add_argument("--out", type=Path, required=True)
    ren.add_argument("--hull", action="store_true")
    ren.add_argument("--blocks", action="store_true")
    ren.add_argument("--width", type=int, default=800)

    st = sub.add_parser("stats", help="print size statistics")
    st.add_argument("file", type=Path)
    return parser


def _generate(args, parser) -> PointSet:
    kind = _KINDS[args.kind]
    unit_sep = not args.no_unit_sep
    if kind is Kind.PR:
        if args.r is None or args.r < 0:
            parser.error("kind pr requires --r R with R >= 0")
        return construct.build_pr(args.r)
    if kind in (Kind.SKL_BASELINE, Kind.SKL_OPTIMIZED):
        if args.k is None or args.l is None or args.k < 2 or args.l < 2:
            parser.error("kind skl requires --k K --l L with K, L >= 2")
        if kind is Kind.SKL_BASELINE:
            return construct.build_skl_baseline(args.k, args.l)
        return construct.build_skl_optimized(args.k, args.l, unit_sep)
    if args.t is None or args.t < 2:
        parser.error("kind es requires --t T with T >= 2")
    if kind is Kind.ES_BASELINE:
        return construct.build_es_baseline(args.t)
    return construct.build_es_optimized(args.t, unit_sep)


def _load(path: Path) -> PointSet:
    data = path.read_bytes()
    return io.deserialize(data, io.sniff_format(data))


def _expected_count(params) -> int:
    if params.kind is Kind.PR:
        return 2 ** params.r
    if params.kind in (Kind.SKL_BASELINE, Kind.SKL_OPTIMIZED):
        return math.comb(params.k + params.l - 4, params.k - 2)
    return 2 ** (params.t - 2)


def _cmd_verify(args) -> int:
    s = _load(args.file)
    try:
        report = verify.full_report(s, include_empty=args.empty)
    except (NotGeneralPosition, DuplicateX) as exc:
        print(f"FAIL: {exc}")
        return 1
    for key, value in report.summary().items():
        print(f"{key}: {value}")

    failures = []
    if args.oracle:
        oracle = verify.brute_force_max_convex(s)
        print(f"oracle_max_convex: {oracle}")
        if oracle != report.max_convex:
            failures.append(f"oracle disagrees: {oracle} != {report.max_convex}")

    params = s.params
    if params is not None:
        if report.n != _expected_count(params):
            failures.append(
                f"point count {report.n} != {_expected_count(params)}")
        if not report.general_position:
            failures.append(f"collinear triple {report.collinear_witness}")
        if params.kind in (Kind.SKL_BASELINE, Kind.SKL_OPTIMIZED):
            if report.max_cup > params.k - 1:
                failures.append(f"{report.max_cup}-cup exceeds bound "
                                f"{params.k - 1}")
            if report.max_cap > params.l - 1:
                failures.append(f"{report.max_cap}-cap exceeds bound "
                                f"{params.l - 1}")
        if params.kind in (Kind.ES_BASELINE, Kind.ES_OPTIMIZED):
            if report.max_convex > params.t - 1:
                failures.append(f"convex {report.max_convex}-gon exceeds "
                                f"bound {params.t - 1}")
    for f in failures:
        print(f"FAIL: {f}")
    if not failures:
        print("OK")
    return 1 if failures else 0


def _cmd_stats(args) -> int:
    s = _load(args.file)
    b = bounding_box(s)
    print(f"n: {len(s)}")
    print(f"width: {b.width}")
    print(f"height: {b.height}")
    if s.params is not None:
        print(f"construction: {s.params.label()}")
        t = s.params.t
        if t is not None:
            bound = 3 * t * t * (t + 1) * 4 ** (t + 1)
            print(f"baseline_grid_bound: {bound}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            s = _generate(args, parser)
            fmt = io.FORMAT_JSON if args.format == "json" else io.FORMAT_TEXT
            data = io.serialize(s, fmt)
            if args.out:
                args.out.write_bytes(data)
            else:
                sys.stdout.write(data.decode("ascii"))
            return 0
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "render":
            s = _load(args.file)
            svg = io.render_svg(s, canvas_width_px=args.width,
                                show_hull=args.hull, show_blocks=args.blocks)
            args.out.write_bytes(svg)
            return 0
        if args.command == "stats":
            return _cmd_stats(args)
    except (EsgridError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
