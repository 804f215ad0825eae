"""Command-line front end: ``cubicbir <subcommand> [options]``.

Exit codes: 0 success, 1 domain error (error JSON on stdout), 2 verification
failure, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import boundary, cones, e6, mmp, naruki, picard, svg, verify
from .errors import CubicBirError, InternalInconsistencyError
from .picard import DivisorClass, Space
from .rational import fmt, parse_rational, parse_vector

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VERIFY = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D401 - argparse hook
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _vector(text: str) -> tuple[Fraction, ...]:
    try:
        return parse_vector(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _space(text: str) -> Space:
    try:
        return Space(text.upper())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown space {text!r}") from None


# -- output ------------------------------------------------------------------------------


def _flatten(obj: Any, prefix: str = "") -> list[tuple[str, str]]:
    if isinstance(obj, dict):
        rows = []
        for k, v in obj.items():
            rows.extend(_flatten(v, f"{prefix}.{k}" if prefix else str(k)))
        return rows
    if isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        rows = []
        for i, v in enumerate(obj):
            rows.extend(_flatten(v, f"{prefix}[{i}]"))
        return rows
    if isinstance(obj, list):
        return [(prefix, ",".join(_scalar(x) for x in obj))]
    return [(prefix, _scalar(obj))]


def _scalar(x: Any) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return "null"
    return str(x)


def emit(obj: Any, fmt_name: str, out) -> None:
    if fmt_name == "tsv":
        out.write("".join(f"{k}\t{v}\n" for k, v in _flatten(obj)))
    else:
        out.write(json.dumps(obj, indent=2) + "\n")


def _divisor(args) -> DivisorClass:
    if args.named is not None:
        return picard.parse_named(args.space, args.named)
    if args.divisor is None:
        raise UsageError("one of --divisor or --named is required")
    return DivisorClass(args.space, args.divisor)


# -- subcommands -------------------------------------------------------------------------


def cmd_counts(args) -> Any:
    return e6.counts()


def cmd_incidence(args) -> Any:
    if args.tritangent:
        t = e6.tritangent(s.strip() for s in args.tritangent.split(","))
        common, disjoint, triads = e6.tritangent_incidence(t)
        return {"tritangent": list(t.labels), "common_line": common, "disjoint": disjoint, "triads": triads}
    signatures = sorted({e6.tritangent_incidence(t) for t in e6.enumerate_tritangents()})
    roots = e6.enumerate_roots()
    containment = e6.a23_containment()
    return {
        "tritangent_signatures": [list(s) for s in signatures],
        "triads": len(e6.enumerate_triads()),
        "orthogonality_degrees": sorted({e6.orthogonality_degree(r) for r in roots}),
        "a23_per_root": sorted({len(v) for v in containment.values()}),
        "roots_per_a23": sorted({len(s.roots) for s in e6.enumerate_a23()}),
    }


def cmd_weyl(args) -> Any:
    w = e6.weyl_closure()
    return {"order": w.order, "orbit_sizes": w.orbit_sizes, "backend": w.backend}


def cmd_pair(args) -> Any:
    d = _divisor(args)
    values = picard.pairings(d)
    if args.curve:
        if args.curve not in values:
            raise KeyError(f"unknown curve tag {args.curve!r} on {d.space.value}")
        values = {args.curve: values[args.curve]}
    return {"divisor": d.to_json(), "pairings": {k: fmt(v) for k, v in values.items()}}


def cmd_restrict(args) -> Any:
    d = _divisor(args)
    return {"divisor": d.to_json(), "restriction": boundary.restrict(d, args.target).to_json()}


def cmd_pair_on(args) -> Any:
    if args.curve not in boundary.HOST_CURVES:
        raise KeyError(f"unknown curve tag {args.curve!r}")
    curve = boundary.HOST_CURVES[args.curve]
    if args.named is not None and args.named == "B_e":
        cls = boundary.restrict_named("B_e", curve.lattice)
    else:
        cls = boundary.restrict(_divisor(args), curve.lattice)
    return {"restriction": cls.to_json(), "curve": args.curve, "value": fmt(boundary.pair_on_divisor(cls, curve))}


def cmd_effective(args) -> Any:
    return boundary.effective_test(args.lattice, args.coeffs).to_json()


def cmd_cones(args) -> Any:
    space = args.space
    out = {"space": space.value, "basis": list(picard.BASIS[space])}
    if args.kind in ("nef", "all"):
        out["nef"] = cones.nef_cone(space).to_json()
    if args.kind in ("effective", "all"):
        out["effective"] = cones.effective_cone(space).to_json()
    if args.kind in ("mori", "all"):
        out["mori"] = cones.mori_cone(space).to_json()
        out["curve_tags"] = list(picard.CURVE_TAGS[space])
    return out


def cmd_sbl(args) -> Any:
    return {"sbl": naruki.classify_sbl(args.x, args.y).value, "model": naruki.classify_model(args.x, args.y).value}


def cmd_model(args) -> Any:
    return {"model": naruki.classify_model(args.x, args.y).value}


def cmd_lc_model(args) -> Any:
    lc = mmp.lc_check(args.c, args.d)
    if not lc.log_canonical:
        return {"model": None, "lc": lc.to_json()}
    p = mmp.LogPair(args.c, args.d)
    classified = mmp.classify(p)
    verified, cert = mmp.verify(p)
    if classified.label is not verified.label:
        raise InternalInconsistencyError(
            f"classify gives {classified.label.value}, verify gives {verified.label.value}",
            certificate=cert.to_json(),
        )
    return {
        "model": verified.label.value,
        "contracted_curves": sorted(verified.contracted_curves),
        "lc": lc.to_json(),
        "delta": picard.DivisorClass(Space.Y_TILDE, cert.delta).to_json(),
        "certificate": cert.to_json(),
    }


def cmd_sweep(args) -> Any:
    rows = mmp.sweep(mmp.grid(args.ni, args.nj, args.di, args.dj), jobs=args.jobs)
    disagreements = [(p, a, b) for p, a, b in rows if a != b]
    counts: dict[str, int] = {}
    for _, a, _ in rows:
        counts[a] = counts.get(a, 0) + 1
    result = {
        "points": len(rows),
        "counts": counts,
        "disagreements": [{"c": fmt(p.c), "d": fmt(p.d), "classify": a, "verify": b} for p, a, b in disagreements],
    }
    return result, (EXIT_VERIFY if disagreements else EXIT_OK)


def cmd_verify_tables(args) -> Any:
    report = verify.verify_tables()
    if args.format == "tsv":
        return verify.report_tsv(report), (EXIT_OK if report.ok else EXIT_VERIFY)
    return report.to_json(), (EXIT_OK if report.ok else EXIT_VERIFY)


def cmd_chambers(args) -> Any:
    if args.format == "svg":
        return svg.render(args.figure, args.scale)
    out = {}
    if args.figure in ("1", "both"):
        out["figure1"] = naruki.figure1_json()
    if args.figure in ("2", "both"):
        out["figure2"] = mmp.figure2_json()
    return out


# -- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cubicbir", description="Invariant birational geometry of marked cubic surface moduli.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name: str, func, help_text: str, formats=("json", "tsv")) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=formats, default="json")
        p.set_defaults(func=func)
        return p

    def divisor_opts(p, default_space="Y_TILDE"):
        p.add_argument("--space", type=_space, default=Space(default_space))
        p.add_argument("--divisor", type=_vector, help="coefficients p/q,... in the space's basis")
        p.add_argument("--named", help="K, E, B, 0 or a basis label")

    add("counts", cmd_counts, "enumeration counts of the E6 configurations")
    p = add("incidence", cmd_incidence, "tritangent incidence signatures")
    p.add_argument("--tritangent", help="three line labels, e.g. e5,c6,l56")
    add("weyl", cmd_weyl, "order and orbits of the reflection group on the 27 lines")
    p = add("pair", cmd_pair, "pair an invariant divisor with invariant curves")
    divisor_opts(p)
    p.add_argument("--curve")
    p = add("restrict", cmd_restrict, "restrict an invariant divisor to a boundary divisor")
    divisor_opts(p)
    p.add_argument("--target", required=True, choices=sorted(boundary.RESTRICTIONS))
    p = add("pair-on", cmd_pair_on, "restrict to a curve's host divisor and pair there")
    divisor_opts(p)
    p.add_argument("--curve", required=True)
    p = add("effective", cmd_effective, "effectivity of a symmetric class on a boundary lattice")
    p.add_argument("--lattice", required=True, choices=list(boundary.EFFECTIVE_LATTICES))
    p.add_argument("--coeffs", required=True, type=_vector)
    p = add("cones", cmd_cones, "nef, effective and curve cones")
    p.add_argument("--space", type=_space, default=Space.Y_BAR)
    p.add_argument("--kind", choices=("nef", "effective", "mori", "all"), default="all")
    for name, func, text in (
        ("sbl", cmd_sbl, "stable base locus chamber of x B_A1 + y B_A23"),
        ("model", cmd_model, "birational model of x B_A1 + y B_A23"),
    ):
        p = add(name, func, text)
        p.add_argument("--x", type=_rational, required=True)
        p.add_argument("--y", type=_rational, required=True)
    p = add("lc-model", cmd_lc_model, "log canonical model of (Y_TILDE, cB + dE) with certificate")
    p.add_argument("--c", type=_rational, required=True)
    p.add_argument("--d", type=_rational, required=True)
    p = add("sweep", cmd_sweep, "compare classify and verify on the grid (i/di, j/dj)")
    p.add_argument("--ni", type=int, default=40)
    p.add_argument("--nj", type=int, default=40)
    p.add_argument("--di", type=int, default=40)
    p.add_argument("--dj", type=int, default=60)
    p.add_argument("--jobs", type=int, default=1)
    add("verify-tables", cmd_verify_tables, "recompute every derivable table entry")
    p = add("chambers", cmd_chambers, "chamber diagrams as data or SVG", formats=("json", "svg"))
    p.add_argument("--figure", choices=("1", "2", "both"), default="both")
    p.add_argument("--scale", type=int, default=360, help="pixels per unit of c in figure 2")
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    try:
        result = args.func(args)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except InternalInconsistencyError as exc:
        emit({"error": type(exc).__name__, "message": str(exc), "certificate": exc.certificate}, "json", out)
        return EXIT_VERIFY
    except (CubicBirError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        emit({"error": type(exc).__name__, "message": msg}, "json", out)
        err.write(f"error: {msg}\n")
        return EXIT_DOMAIN
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    if isinstance(result, str):
        out.write(result)
    else:
        emit(result, args.format, out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
