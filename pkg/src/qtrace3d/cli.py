"""Command line interface.

Subcommands::

    qtrace3d fixture 41                       print the bundled census triangulation
    qtrace3d tri info <tri>                   summary invariants
    qtrace3d curve resolve <tri> <curve>      resolve a curve to transit arcs
    qtrace3d shapes solve <tri> [--count K]   sample solved shape parameters
    qtrace3d trace quantum <tri> <curve>      the quantum trace polynomial
    qtrace3d trace classical <tri> <curve>    the classical (q = 1) trace
    qtrace3d frobenius check <tri> <curve> --N 2 [--bound 6]

``<tri>`` is a path to a triangulation JSON file, or ``-`` for stdin.
``<curve>`` is ``meridian``/``longitude`` (the bundled peripheral curves
of the census fixture) or ``<anchor>=<word>`` with anchor syntax
``L<tet>:C<face>:S<slot>``.  Exit status: 2 for usage errors, 1 for
computation failures, 0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import fixture
from .cheb_frobenius import check_commuting_square
from .classical import classical_trace
from .lantern import Anchor, CurveError, resolve_word
from .quantum_trace import quantum_trace
from .shapes import accepted_lifts, variety_points
from .triangulation import Triangulation


class UsageError(Exception):
    pass


def _load_tri(arg: str) -> Triangulation:
    if arg == "-":
        text = sys.stdin.read()
    else:
        with open(arg) as fh:
            text = fh.read()
    return Triangulation.from_json(text)


def _load_curve(tri: Triangulation, arg: str):
    if arg in ("meridian", "longitude"):
        if tri.to_json() != Triangulation.from_json(fixture.FIGURE_EIGHT_JSON).to_json():
            raise UsageError(
                f"'{arg}' names a bundled curve of the census fixture; "
                "this triangulation is different"
            )
        return (fixture.meridian_transits() if arg == "meridian"
                else fixture.longitude_transits())
    if "=" not in arg:
        raise UsageError(
            "curve must be 'meridian', 'longitude' or '<anchor>=<word>'"
        )
    anchor_text, word = arg.split("=", 1)
    try:
        anchor = Anchor.parse(anchor_text)
    except ValueError as exc:
        raise UsageError(str(exc))
    return resolve_word(tri, anchor, word)


# -- formatting ---------------------------------------------------------------


def _half_power(e: int) -> str:
    """q-power string for s^e with s = q^{1/2}."""
    if e % 2 == 0:
        n = e // 2
        return "q" if n == 1 else f"q^{n}"
    return f"q^{e}/2"


def _coeff_str(c) -> str:
    parts = []
    for e, (a, b) in sorted(c.terms, reverse=True):
        if (a, b) == (1, 0):
            g = ""
        elif (a, b) == (-1, 0):
            g = "-"
        elif (a, b) == (0, 1):
            g = "i"
        elif (a, b) == (0, -1):
            g = "-i"
        elif b == 0:
            g = str(a)
        elif a == 0:
            g = f"{b}i"
        else:
            g = f"({a}{b:+}i)"
        if e == 0:
            parts.append(g + "1" if g in ("", "-") else g)
        else:
            parts.append(g + _half_power(e))
    return " + ".join(parts).replace("+ -", "- ")


def _monomial_str(k) -> str:
    names = []
    for i, e in enumerate(k):
        if not e:
            continue
        var = ("z" if i % 2 == 0 else "w") + str(i // 2)
        names.append(var if e == 1 else f"{var}^{e}")
    return " ".join(names)


def format_trace(element) -> str:
    """Deterministic plain-text form, e.g. 'z0 w1^-1 + z0^-1 w1'."""
    if element.is_zero():
        return "0"
    parts = []
    for k in sorted(element.terms, reverse=True):
        c = element.terms[k]
        cs = _coeff_str(c)
        ms = _monomial_str(k)
        if not ms:
            parts.append(cs if cs else "1")
        elif cs == "1":
            parts.append(ms)
        elif cs == "-1":
            parts.append("-" + ms)
        elif "+" in cs or "- " in cs:
            parts.append(f"({cs}) {ms}")
        else:
            parts.append(f"{cs} {ms}")
    return " + ".join(parts).replace("+ -", "- ")


# -- subcommands --------------------------------------------------------------


def _cmd_fixture(args) -> int:
    if args.name != "41":
        raise UsageError("unknown fixture (try: 41)")
    print(fixture.FIGURE_EIGHT_JSON)
    return 0


def _cmd_tri_info(args) -> int:
    tri = _load_tri(args.tri)
    info = tri.info()
    if args.json:
        print(json.dumps(info, sort_keys=True))
    else:
        print(
            f"N={info['num_tetrahedra']}, "
            f"edges: {info['edge_valences']}, "
            f"cusps: {info['num_cusps']}"
        )
    return 0


def _cmd_curve_resolve(args) -> int:
    tri = _load_tri(args.tri)
    transits = _load_curve(tri, args.curve)
    if args.json:
        print(json.dumps([t.tagged() for t in transits]))
    else:
        for t in transits:
            print(t)
    return 0


def _cmd_shapes_solve(args) -> int:
    tri = _load_tri(args.tri)
    rng = random.Random(args.seed)
    points = variety_points(tri, args.count, rng)
    out = [[[z.real, z.imag] for z in pt] for pt in points]
    print(json.dumps(out))
    return 0


def _cmd_trace_quantum(args) -> int:
    tri = _load_tri(args.tri)
    transits = _load_curve(tri, args.curve)
    element = quantum_trace(tri, [list(transits)])
    if args.json:
        print(json.dumps(
            {str(list(k)): repr(c) for k, c in sorted(element.terms.items())},
            sort_keys=True,
        ))
    else:
        print(format_trace(element))
    return 0


def _cmd_trace_classical(args) -> int:
    tri = _load_tri(args.tri)
    transits = _load_curve(tri, args.curve)
    rng = random.Random(args.seed)
    shapes = variety_points(tri, 1, rng)[0]
    lifts = accepted_lifts(tri, shapes)
    if not lifts:
        raise RuntimeError("no square-root lift of the solved shapes")
    value = classical_trace(tri.num_tetrahedra, list(transits), lifts[0])
    print(json.dumps({"shapes": [[z.real, z.imag] for z in shapes],
                      "trace": [value.real, value.imag]}))
    return 0


def _cmd_frobenius_check(args) -> int:
    tri = _load_tri(args.tri)
    transits = _load_curve(tri, args.curve)
    report = check_commuting_square(tri, transits, args.N, bound=args.bound)
    print(json.dumps(report, sort_keys=True))
    return 0 if report["verdict"] == "equal-with-certificate" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qtrace3d", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fixture", help="print a bundled triangulation")
    p.add_argument("name")
    p.set_defaults(func=_cmd_fixture)

    tri = sub.add_parser("tri", help="triangulation utilities")
    tri_sub = tri.add_subparsers(dest="subcommand", required=True)
    p = tri_sub.add_parser("info")
    p.add_argument("tri")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_tri_info)

    curve = sub.add_parser("curve", help="curve utilities")
    curve_sub = curve.add_subparsers(dest="subcommand", required=True)
    p = curve_sub.add_parser("resolve")
    p.add_argument("tri")
    p.add_argument("curve")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_curve_resolve)

    shapes = sub.add_parser("shapes", help="shape parameter solving")
    shapes_sub = shapes.add_subparsers(dest="subcommand", required=True)
    p = shapes_sub.add_parser("solve")
    p.add_argument("tri")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_shapes_solve)

    trace = sub.add_parser("trace", help="trace computations")
    trace_sub = trace.add_subparsers(dest="subcommand", required=True)
    p = trace_sub.add_parser("quantum")
    p.add_argument("tri")
    p.add_argument("curve")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_trace_quantum)
    p = trace_sub.add_parser("classical")
    p.add_argument("tri")
    p.add_argument("curve")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_trace_classical)

    frob = sub.add_parser("frobenius", help="root-of-unity checks")
    frob_sub = frob.add_subparsers(dest="subcommand", required=True)
    p = frob_sub.add_parser("check")
    p.add_argument("tri")
    p.add_argument("curve")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--bound", type=int, default=6)
    p.set_defaults(func=_cmd_frobenius_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qtrace3d: {exc}", file=sys.stderr)
        return 2
    except (CurveError, ValueError, OSError, RuntimeError,
            ArithmeticError, MemoryError) as exc:
        print(f"qtrace3d: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
