"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 computation error (or a failed
lemma check in ``verify``), 3 the screened knot is excluded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .braid import BraidError, invariants, lorenz_braid
from .census import (
    SizeError,
    burau_spectrum,
    census_csv,
    census_json,
    census_report,
    enumerate_diagrams,
    sample_diagram,
    spectrum_csv,
)
from .diagram import DiagramError, YoungDiagram
from .homology import monodromy
from .linalg import SingularMatrixError
from .polynomial import IntPolynomial, PolynomialError, alexander
from .spectra import (
    BoundError,
    RootFindingError,
    annulus_bound,
    annulus_verdict,
    fmt,
    lorenz_exclusion,
    roots,
    spectral_radius_bound_prop,
)

EXIT_USAGE, EXIT_COMPUTE, EXIT_EXCLUDED = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _diagram(text: str) -> YoungDiagram:
    try:
        return YoungDiagram.parse(text)
    except DiagramError as exc:
        raise UsageError(str(exc)) from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _interval(lo: float, hi: float) -> str:
    return f"[{fmt(lo)}, {fmt(hi)}]"


def scatter_svg(points: Sequence[complex], radius: float, size: int = 600) -> str:
    """Static scatter plot of complex points on the square [-radius, radius]^2."""
    scale = size / (2 * radius)

    def xy(z: complex) -> tuple[float, float]:
        return (z.real + radius) * scale, (radius - z.imag) * scale

    cx, cy = xy(0j)
    unit = scale
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="0" y1="{cy:.3f}" x2="{size}" y2="{cy:.3f}" stroke="#bbb"/>',
        f'<line x1="{cx:.3f}" y1="0" x2="{cx:.3f}" y2="{size}" stroke="#bbb"/>',
        f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{unit:.3f}" fill="none" stroke="#88c"/>',
    ]
    for z in points:
        if abs(z.real) <= radius and abs(z.imag) <= radius:
            x, y = xy(z)
            lines.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="2" fill="#c33"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# -- commands -----------------------------------------------------------------------


def cmd_braid(args) -> int:
    w = lorenz_braid(_diagram(args.diagram))
    if args.format == "json":
        _emit(w.to_json() + "\n", args.out)
    else:
        _emit(f"{w}\n", args.out)
    return 0


def _bounds(d: YoungDiagram):
    inv = invariants(d)
    lower, upper = annulus_bound(inv.genus, inv.braid_index)
    prop = spectral_radius_bound_prop(d.n, d.b_0) if d.b_0 >= 2 else None
    return inv, lower, upper, prop


def cmd_invariants(args) -> int:
    d = _diagram(args.diagram)
    inv, lower, upper, prop = _bounds(d)
    if args.format == "json":
        data = {
            "heights": list(d.heights),
            "n": d.n,
            "g": inv.genus,
            "b": inv.braid_index,
            "strands": inv.strands,
            "crossings": inv.crossings,
            "lower": lower,
            "upper": upper,
            "prop_lower": prop[0] if prop else None,
            "prop_upper": prop[1] if prop else None,
        }
        _emit(json.dumps(data) + "\n", args.out)
    else:
        text = f"g={inv.genus} b={inv.braid_index} bound={_interval(lower, upper)}"
        if prop:
            text += f" cell_bound={_interval(*prop)}"
        _emit(text + "\n", args.out)
    return 0


def cmd_monodromy(args) -> int:
    m = monodromy(_diagram(args.diagram), args.surface, args.inverse)
    if args.format == "json":
        _emit(m.to_json() + "\n", args.out)
    elif args.format == "csv":
        _emit(m.to_csv(), args.out)
    else:
        _emit("".join(" ".join(map(str, row)) + "\n" for row in m.rows), args.out)
    return 0


def cmd_alexander(args) -> int:
    p = alexander(_diagram(args.diagram), args.method)
    if args.format == "json":
        _emit(p.to_json() + "\n", args.out)
    else:
        _emit(p.to_text() + "\n", args.out)
    return 0


def cmd_roots(args) -> int:
    d = _diagram(args.diagram)
    p = alexander(d, "charpoly")
    rs = roots(p)
    inv = invariants(d)
    verdict = annulus_verdict(rs, inv.genus, inv.braid_index)
    if args.csv:
        _emit(rs.to_csv(), args.csv)
    if args.svg:
        _emit(scatter_svg(rs.roots, verdict.upper), args.svg)
    if args.format == "json":
        data = {
            "roots": [[z.real, z.imag] for z in rs.roots],
            "m": rs.max_modulus,
            "residual": rs.residual,
            "lower": verdict.lower,
            "upper": verdict.upper,
            "all_inside": verdict.all_inside,
            "margin": verdict.margin,
        }
        _emit(json.dumps(data) + "\n", args.out)
    else:
        _emit(rs.to_csv(), args.out)
    return 0


def cmd_screen(args) -> int:
    if args.alexander is not None:
        try:
            p = IntPolynomial.parse(args.alexander)
        except PolynomialError as exc:
            raise UsageError(str(exc)) from exc
        v = lorenz_exclusion(args.genus, args.braid_index, alexander=p)
    else:
        v = lorenz_exclusion(args.genus, args.braid_index, m=args.max_modulus)
    if args.format == "json":
        _emit(v.to_json() + "\n", args.out)
    else:
        verdict = "excluded" if v.excluded else "not-excluded"
        _emit(f"{verdict} r={fmt(v.r)} m={fmt(v.m)} bound={_interval(v.lower, v.upper)}\n", args.out)
    return EXIT_EXCLUDED if v.excluded else 0


def cmd_verify(args) -> int:
    from .lemmas import failures, published_forms, report_json, verify_lemmas

    d = _diagram(args.diagram)
    checks = verify_lemmas(d)
    extra = published_forms(d) if args.published else []
    if args.format == "json":
        _emit(report_json(checks + extra) + "\n", args.out)
    else:
        lines = []
        names = list(dict.fromkeys(c.lemma for c in checks + extra))
        for name in names:
            group = [c for c in checks + extra if c.lemma == name]
            bad = [c for c in group if not c.passed]
            status = "pass" if not bad else "FAIL"
            line = f"{name}: {status} ({len(group) - len(bad)}/{len(group)})"
            if bad:
                line += f" first counterexample cell={bad[0].cell} expected={bad[0].expected} actual={bad[0].actual}"
            lines.append(line)
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_COMPUTE if failures(checks) else 0


def cmd_census(args) -> int:
    diagrams = enumerate_diagrams(args.max_cells, args.knots_only)
    records = census_report(diagrams, jobs=args.jobs)
    params = {"max_cells": args.max_cells, "knots_only": str(args.knots_only).lower()}
    if args.format == "json":
        _emit(census_json(records, **params) + "\n", args.out)
    else:
        _emit(census_csv(records, **params), args.out)
    return 0


def cmd_sample(args) -> int:
    out = [str(sample_diagram(args.cells, args.seed, i)) for i in range(args.count)]
    if args.format == "json":
        _emit(json.dumps({"cells": args.cells, "seed": args.seed, "diagrams": out}) + "\n", args.out)
    else:
        _emit("".join(x + "\n" for x in out), args.out)
    return 0


def cmd_burau_spectrum(args) -> int:
    samples = burau_spectrum(args.strands, args.length, args.count, args.seed, args.positive, args.jobs)
    params = {
        "strands": args.strands,
        "length": args.length,
        "count": args.count,
        "seed": args.seed,
        "positive": str(args.positive).lower(),
    }
    if args.svg:
        points = [z for s in samples for z in s.roots]
        radius = max([abs(z) for z in points] + [1.0]) * 1.05
        _emit(scatter_svg(points, radius), args.svg)
    _emit(spectrum_csv(samples, **params), args.out)
    return 0


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lorenzknots", description="Lorenz knots from Young diagrams.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, func, help_text, diagram=True, formats=("text", "json")):
        p = sub.add_parser(name, help=help_text)
        if diagram:
            p.add_argument("diagram", help='column heights, e.g. "4,4,2"')
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", help="write to this file instead of stdout")
        p.set_defaults(func=func)
        return p

    command("braid", cmd_braid, "print the Lorenz braid word")
    command("invariants", cmd_invariants, "genus, braid index and annulus bounds")
    p = command("monodromy", cmd_monodromy, "homological monodromy matrix", formats=("text", "json", "csv"))
    p.add_argument("--surface", choices=("standard", "mixed"), default="standard")
    p.add_argument("--inverse", action="store_true")
    p = command("alexander", cmd_alexander, "Alexander polynomial (ascending coefficients)")
    p.add_argument("--method", choices=("charpoly", "burau", "both"), default="both")
    p = command("roots", cmd_roots, "zeroes of the Alexander polynomial", formats=("csv", "json"))
    p.add_argument("--csv", help="also write the roots as CSV to this file")
    p.add_argument("--svg", help="write a scatter plot of the roots")
    p = command("screen", cmd_screen, "apply the r(K) > 1 exclusion test", diagram=False)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--braid-index", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--max-modulus", type=float)
    group.add_argument("--alexander", help='ascending coefficients, e.g. "1,-1,1"')
    p = command("verify", cmd_verify, "check the closed-form images against the matrices")
    p.add_argument("--published", action="store_true", help="also evaluate the printed formulas known to fail")
    p = command("census", cmd_census, "invariants of every diagram up to a size", diagram=False, formats=("csv", "json"))
    p.add_argument("--max-cells", type=int, required=True)
    p.add_argument("--knots-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p = command("sample", cmd_sample, "uniformly random diagrams", diagram=False)
    p.add_argument("--cells", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p = command("burau-spectrum", cmd_burau_spectrum, "roots for random braids", diagram=False, formats=("csv",))
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--positive", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--svg", help="write a scatter plot of all roots")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"lorenzknots: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (
        BraidError,
        DiagramError,
        PolynomialError,
        RootFindingError,
        BoundError,
        SizeError,
        SingularMatrixError,
        ValueError,
        ArithmeticError,
    ) as exc:
        print(f"lorenzknots: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
