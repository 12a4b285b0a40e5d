"""Command-line front end.

Subcommands::

    tribrackets verify-tribracket FILE
    tribrackets verify-bracket FILE
    tribrackets search-brackets --tribracket X2|X3|FILE --modulus M [--limit N]
    tribrackets invariant --diagram NAME|PD --bracket NAME|FILE [options]
    tribrackets tables --bracket beta1|beta2|FILE [--corpus knots8|links7|all]

Exit codes: 0 success, 1 internal error, 2 input error, 3 resource guard hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import catalog, tables
from .bracket import TribracketBracket, search_brackets, verify_bracket
from .diagram import DiagramError, build_diagram, parse_pd
from .invariant import beta, enumerate_colorings, phi
from .library import BRACKETS, TRIBRACKETS, get_bracket, get_tribracket
from .tribracket import Tribracket

OK, INTERNAL_ERROR, INPUT_ERROR, GUARD = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load_tribracket(spec: str) -> Tribracket:
    if spec in TRIBRACKETS:
        return get_tribracket(spec)
    path = Path(spec)
    if not path.exists():
        raise InputError(f"no built-in tribracket or file named {spec!r}")
    try:
        return Tribracket.from_json(path.read_text())
    except Exception as exc:
        raise InputError(f"cannot parse tribracket file {spec}: {exc}")


def _load_bracket(spec: str, check: bool = True) -> TribracketBracket:
    if spec in BRACKETS:
        return get_bracket(spec)
    path = Path(spec)
    if not path.exists():
        raise InputError(f"no built-in bracket or file named {spec!r}")
    try:
        return TribracketBracket.from_json(path.read_text(), check=check)
    except InputError:
        raise
    except Exception as exc:
        raise InputError(f"cannot load bracket file {spec}: {exc}")


def _load_diagram(spec: str):
    try:
        entry = catalog.get(spec)
        return entry.pd
    except catalog.UnknownNameError as exc:
        if "X" in spec or "U" in spec:
            try:
                return parse_pd(spec)
            except DiagramError as pd_exc:
                raise InputError(str(pd_exc))
        raise InputError(str(exc))


def cmd_verify_tribracket(args) -> int:
    t = _load_tribracket(args.file)
    report = t.verify()
    print(f"size: {t.size}")
    print(t.pretty())
    if report.valid:
        print("valid: yes (quasigroup divisions and the three-way identity hold)")
        return OK
    print("valid: no")
    for axiom, witness in report.violations[: args.max_violations]:
        print(f"  violates ({axiom}) at {witness}")
    return INPUT_ERROR


def _matrices(tensor) -> str:
    return "\n".join(
        "  " + " | ".join(" ".join(str(v) for v in mat[row]) for mat in tensor)
        for row in range(len(tensor))
    )


def cmd_verify_bracket(args) -> int:
    bracket = _load_bracket(args.file, check=False)
    report = bracket.verify(four_term_iv=not args.five_term_iv)
    print(f"tribracket size: {bracket.tribracket.size}  modulus: {bracket.ring.modulus}")
    print(f"A (matrix list):\n{_matrices(bracket.a_raw)}")
    print(f"B (matrix list):\n{_matrices(bracket.b_raw)}")
    print(f"delta: {bracket.delta}  w: {bracket.w}")
    if report.valid:
        print("valid: yes")
        return OK
    print("valid: no")
    for eq, quad in report.skein_violations[: args.max_violations]:
        print(f"  equation {eq} fails at (a,b,c,d) = {quad}")
    return INPUT_ERROR


def cmd_search_brackets(args) -> int:
    x = _load_tribracket(args.tribracket)
    try:
        results = search_brackets(
            x, args.modulus, limit=args.limit, prune=not args.no_prune,
            four_term_iv=not args.five_term_iv,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return GUARD
    for bracket in results:
        print(bracket.to_json())
    print(f"# {len(results)} brackets", file=sys.stderr)
    return OK


def cmd_invariant(args) -> int:
    pd = _load_diagram(args.diagram)
    bracket = _load_bracket(args.bracket)
    if args.orientations:
        for idx in args.orientations.split(","):
            mask = int(idx)
            from .diagram import reverse_component

            cur = pd
            comp = len(build_diagram(pd).components)
            for i in range(comp):
                if (mask >> i) & 1:
                    cur = reverse_component(cur, i)
            value = phi(build_diagram(cur), bracket)
            print(f"orientation {mask}: {value.canonical_string()}  {value.to_json()}")
        return OK
    diagram = build_diagram(pd)
    colorings = enumerate_colorings(diagram, bracket.tribracket)
    value = phi(diagram, bracket)
    print(f"crossings: {diagram.pd.crossing_count}  components: {diagram.component_count}")
    print(f"colorings: {len(colorings)}")
    print(f"phi: {value.canonical_string()}")
    print(f"json: {value.to_json()}")
    if args.colorings:
        for coloring in colorings:
            print(f"  {coloring.assignment} -> {beta(coloring, bracket)}")
    if args.dump_diagram:
        print(diagram.debug_json())
    return OK


def cmd_tables(args) -> int:
    bracket_name = args.bracket if args.bracket in tables.EXPECTED else None
    bracket = _load_bracket(args.bracket)
    names = tables.corpus(args.corpus)
    started = time.time()
    rows = [tables.compare_entry(name, bracket, bracket_name) for name in names]
    header = "name,crossings,components,coloring_count,phi,orientation_mask,match"
    lines = [header] + [row.csv() for row in rows]
    output = "\n".join(lines)
    if args.csv:
        Path(args.csv).write_text(output + "\n")
    print(output)
    mismatches = [row for row in rows if not row.match]
    errata = [row for row in rows if row.note]
    for row in errata:
        print(f"# erratum flag for {row.name}: {row.note}")
    print(f"# {len(rows)} rows, {len(mismatches)} mismatches, "
          f"{time.time() - started:.1f}s")
    for row in mismatches:
        print(f"# MISMATCH {row.name}: computed {row.computed}, published {row.expected}")
    return OK if not mismatches else INPUT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tribrackets",
        description="Ternary-quasigroup colorings and skein enhancements for knots and links",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-tribracket", help="check the two tribracket axioms")
    p.add_argument("file", help="tensor JSON file or built-in name (X2, X3)")
    p.add_argument("--max-violations", type=int, default=10)
    p.set_defaults(func=cmd_verify_tribracket)

    p = sub.add_parser("verify-bracket", help="check delta/w and the skein equations")
    p.add_argument("file", help="bracket JSON file or built-in name (beta1, beta2, z7)")
    p.add_argument("--five-term-iv", action="store_true",
                   help="use the five-term variant of equation iv")
    p.add_argument("--max-violations", type=int, default=10)
    p.set_defaults(func=cmd_verify_bracket)

    p = sub.add_parser("search-brackets", help="enumerate all brackets over Z_m")
    p.add_argument("--tribracket", required=True)
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--limit", type=int)
    p.add_argument("--no-prune", action="store_true", help="oracle mode (exhaustive)")
    p.add_argument("--five-term-iv", action="store_true")
    p.add_argument("--workers", type=int, default=0,
                   help="accepted for interface compatibility; search is sequential")
    p.set_defaults(func=cmd_search_brackets)

    p = sub.add_parser("invariant", help="coloring count and enhancement polynomial")
    p.add_argument("--diagram", required=True, help="catalog name or PD text")
    p.add_argument("--bracket", required=True)
    p.add_argument("--orientations", help="comma-separated orientation masks")
    p.add_argument("--colorings", action="store_true", help="list per-coloring values")
    p.add_argument("--dump-diagram", action="store_true",
                   help="emit the faces/signs/roles debug JSON")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("tables", help="recompute the catalog and compare to the published tables")
    p.add_argument("--bracket", default="beta1")
    p.add_argument("--corpus", default="all", choices=["knots8", "links7", "all"])
    p.add_argument("--csv", help="also write the CSV to this path")
    p.add_argument("--workers", type=int, default=0,
                   help="accepted for interface compatibility; evaluation is sequential")
    p.set_defaults(func=cmd_tables)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except (DiagramError, catalog.UnknownNameError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except Exception as exc:  # pragma: no cover
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
