"""Command-line entry point: ``seifertkit <subcommand> ...``.

Structured results are JSON (sorted keys, no timestamps), curves and fields
are CSV.  Input errors exit with status 2, failed numeric preconditions or
failed verification with status 1.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .braid import BraidError, BraidWord, fibrability_report, parse_braid
from .catalog import get_entry, load_catalog, verify_catalog
from .diagram import DiagramError, LinkDiagram, closure_to_diagram
from .framing import FramingError, framing_report
from .geometry import (
    ComplexPair,
    GeometryError,
    curve_to_r3,
    gauss_linking,
    hopf_fiber,
    ranada_grid,
    read_curve_csv,
    torus_fiber,
    write_curve_csv,
    write_field_csv,
)
from .invariants import invariant_bundle
from .seifert import SeifertError, euler_genus, seifert_circles, surface_from_braid


class UsageError(Exception):
    """Bad input; exit status 2."""


class CheckFailed(Exception):
    """A numeric precondition or verification failed; exit status 1."""


def _add_source(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("input (exactly one)")
    g.add_argument("--braid", help='braid word, e.g. "1 -2 1 -2" or "n=4 1 2 3"')
    g.add_argument("--pd", type=Path, help="PD-code JSON file (oriented object or unsigned table list)")
    g.add_argument("--name", help="catalog entry name")
    p.add_argument("--out", type=Path, help="write the result here instead of stdout")


def _source(args) -> tuple[BraidWord | None, LinkDiagram]:
    given = [x for x in (args.braid, args.pd, args.name) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --braid, --pd, --name")
    try:
        if args.braid is not None:
            w = parse_braid(args.braid)
            return w, closure_to_diagram(w)
        if args.pd is not None:
            try:
                obj = json.loads(args.pd.read_text())
            except OSError as exc:
                raise UsageError(f"cannot read {args.pd}: {exc.strerror}") from None
            except json.JSONDecodeError as exc:
                raise UsageError(f"{args.pd}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
            if isinstance(obj, list):
                return None, LinkDiagram.from_knot_table_pd(obj)
            return None, LinkDiagram.from_json_obj(obj)
        try:
            e = get_entry(args.name)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        if e.braid_word is not None:
            return e.braid_word, closure_to_diagram(e.braid_word)
        return None, e.pd_code
    except (BraidError, DiagramError) as exc:
        raise UsageError(str(exc)) from None


def _emit_json(obj, out: Path | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def cmd_invariants(args) -> int:
    w, d = _source(args)
    bundle = invariant_bundle(braid=w) if w is not None else invariant_bundle(diagram=d)
    _emit_json(bundle, args.out)
    return 0


def cmd_seifert(args) -> int:
    w, d = _source(args)
    try:
        if w is not None:
            data = surface_from_braid(w, with_matrix=not args.no_matrix).to_dict()
        else:
            s, c, mu = seifert_circles(d), len(d.crossings), d.components
            chi, g = euler_genus(s, c, mu)
            data = {"s": s, "c": c, "mu": mu, "chi": chi, "g": g, "matrix": None}
    except SeifertError as exc:
        raise CheckFailed(str(exc)) from None
    _emit_json(data, args.out)
    return 0


def cmd_framing(args) -> int:
    _, d = _source(args)
    if args.convention == "explicit" and args.twist is None:
        raise UsageError("--convention explicit needs --twist")
    try:
        rep = framing_report(d, args.convention, args.twist)
    except FramingError as exc:
        raise CheckFailed(str(exc)) from None
    _emit_json(rep, args.out)
    return 0


def cmd_fibration(args) -> int:
    w, _ = _source(args)
    if w is None:
        raise UsageError("fibration-check needs a braid word (--braid or a catalog entry with one)")
    try:
        rep = fibrability_report(w)
    except BraidError as exc:
        raise CheckFailed(str(exc)) from None
    _emit_json(rep.to_dict(), args.out)
    return 0


def _parse_vector(text: str, n: int, flag: str) -> list[float]:
    parts = text.replace(",", " ").split()
    if len(parts) != n:
        raise UsageError(f"{flag} needs {n} numbers, got {text!r}")
    out = []
    for tok in parts:
        try:
            out.append(float(tok))
        except ValueError:
            raise UsageError(f"{flag}: bad number {tok!r}") from None
    return out


def cmd_fiber(args) -> int:
    if (args.alpha is None) != (args.beta is None):
        raise UsageError("--alpha and --beta go together")
    try:
        if args.alpha is not None:
            start = None
            if args.start is not None:
                x = _parse_vector(args.start, 4, "--start")
                norm = math.sqrt(sum(v * v for v in x))
                start = ComplexPair.from_vector([v / norm for v in x])
            curve = torus_fiber(args.alpha, args.beta, start, args.samples, allow_link=args.allow_link)
        else:
            base = _parse_vector(args.base, 3, "--base")
            curve = hopf_fiber(base, args.samples)
        pts = curve.points if args.dim == 4 else curve_to_r3(curve)
    except GeometryError as exc:
        raise CheckFailed(str(exc)) from None
    write_curve_csv(sys.stdout if args.out is None else args.out, curve, pts)
    return 0


def cmd_linking(args) -> int:
    try:
        c1, c2 = read_curve_csv(args.curve1), read_curve_csv(args.curve2)
    except OSError as exc:
        raise UsageError(f"cannot read curve: {exc}") from None
    except GeometryError as exc:
        raise UsageError(str(exc)) from None
    try:
        value = gauss_linking(c1, c2)
    except GeometryError as exc:
        raise CheckFailed(str(exc)) from None
    _emit_json({"linking": round(value, 9), "nearest_integer": round(value)}, args.out)
    return 0


def cmd_field(args) -> int:
    try:
        samples, skipped = ranada_grid(args.grid, args.extent, args.h)
    except GeometryError as exc:
        raise CheckFailed(str(exc)) from None
    if skipped:
        print(f"skipped {skipped} grid point(s) on the singular locus", file=sys.stderr)
    write_field_csv(sys.stdout if args.out is None else args.out, samples)
    return 0


def cmd_catalog(args) -> int:
    entries = load_catalog(include_optional=args.include_optional)
    if args.name is not None:
        entries = [e for e in entries if e.name == args.name]
        if not entries:
            try:
                entries = [get_entry(args.name)]
            except KeyError as exc:
                raise UsageError(exc.args[0]) from None
    if not args.verify:
        listing = [
            {"name": e.name, "braid": str(e.braid_word) if e.braid_word else None,
             "pd": e.pd_code is not None, "optional": e.optional}
            for e in entries
        ]
        _emit_json(listing, args.out)
        return 0
    rows = verify_catalog(entries)
    lines = [f"{'entry':<16} {'invariant':<28} {'status':<6} expected | computed"]
    for r in rows:
        lines.append(f"{r.entry:<16} {r.invariant:<28} {'pass' if r.passed else 'FAIL':<6} {r.expected} | {r.computed}")
    failed = sum(not r.passed for r in rows)
    lines.append(f"{len(rows) - failed}/{len(rows)} rows passed")
    text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seifertkit", description="Knot invariants, braided open books and Hopf-fibration sampling.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="Alexander, Conway, Jones, HOMFLY, genus and fibrability as JSON")
    _add_source(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("seifert", help="Seifert surface data as JSON")
    _add_source(p)
    p.add_argument("--no-matrix", action="store_true", help="omit the Seifert matrix")
    p.set_defaults(func=cmd_seifert)

    p = sub.add_parser("framing", help="framed-band report as JSON")
    _add_source(p)
    p.add_argument("--convention", choices=("vertical", "explicit"), default="vertical")
    p.add_argument("--twist", type=int, help="twist number for the explicit convention")
    p.set_defaults(func=cmd_framing)

    p = sub.add_parser("fibration-check", help="fibrability report of a braid closure as JSON")
    _add_source(p)
    p.set_defaults(func=cmd_fibration)

    p = sub.add_parser("fiber", help="sample a Hopf fiber or a torus-knot fiber as CSV")
    p.add_argument("--alpha", type=int, help="torus fiber exponent of z1")
    p.add_argument("--beta", type=int, help="torus fiber exponent of z2")
    p.add_argument("--start", help="start point (x1,x2,x3,x4) for a torus fiber, normalized to the 3-sphere")
    p.add_argument("--base", default="0,0,1", help="base point on the 2-sphere for a Hopf fiber (default 0,0,1)")
    p.add_argument("--samples", type=int, default=512)
    p.add_argument("--dim", type=int, choices=(3, 4), default=3, help="write R^3 (projected) or 4-space points")
    p.add_argument("--allow-link", action="store_true", help="accept non-coprime alpha, beta")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("linking", help="Gauss linking number of two closed curve CSV files")
    p.add_argument("curve1", type=Path)
    p.add_argument("curve2", type=Path)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_linking)

    p = sub.add_parser("field", help="hopfion B and E fields on a grid as CSV")
    p.add_argument("--grid", type=int, default=5, help="points per axis")
    p.add_argument("--extent", type=float, default=2.0, help="half-width of the cube")
    p.add_argument("--h", type=float, default=1e-4, help="finite-difference step")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("catalog", help="list or verify the built-in fixtures")
    p.add_argument("--verify", action="store_true", help="compare computed invariants with stored values")
    p.add_argument("--name", help="restrict to one entry")
    p.add_argument("--include-optional", action="store_true", help="include the 11-crossing table fixtures")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"seifertkit {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except CheckFailed as exc:
        print(f"seifertkit {args.command}: check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
