"""Command-line front end.

Exit codes: 0 when every requested check passes, 1 when a check fails (or a
computation cannot complete), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import cartan
from .canon_ops import GENERATOR_NAMES, UnknownOperator, get_operator, registry_names
from .lie.span import ClosureNotReached, default_max_rounds, span_closure
from .report import dumps
from .reptheory import NotInvariant, isotypical_table, restrict
from .scalars import format_scalar
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
TABLES = ("isotypical", "weights", "mdeg", "diagonals")


class UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _grid(rows: list[list[str]]) -> str:
    width = max((len(c) for r in rows for c in r), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in rows)


# -- verify --------------------------------------------------------------------

def cmd_verify(args) -> int:
    rep = run_suite(args.suite)
    if args.format == "json":
        _emit(dumps(rep.to_json()))
    else:
        _emit(rep.format(verbose=args.verbose))
        if args.suite == "all":
            for name in SUITES:
                part = [c for c in rep.checks if c.id.startswith(name + "/")]
                bad = sum(not c.passed for c in part)
                _emit(f"  {name:<10} {len(part) - bad:>4}/{len(part):<4} passed")
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- matrix --------------------------------------------------------------------

def cmd_matrix(args) -> int:
    try:
        t = get_operator(args.name)
    except UnknownOperator:
        raise UsageError(f"unknown operator {args.name!r}; try one of: {', '.join(registry_names())}")
    if args.restrict_v:
        try:
            m = restrict(t)
        except NotInvariant as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
        rows = [[format_scalar(x) for x in r] for r in m.rows]
    else:
        dense = t.dense()
        rows = [[format_scalar(x) for x in r] for r in dense]
    if args.format == "json":
        _emit(dumps({"name": args.name, "dim": len(rows), "entries": rows}))
    else:
        _emit(f"{args.name} ({len(rows)}x{len(rows)})")
        _emit(_grid(rows))
    return EXIT_OK


# -- table ---------------------------------------------------------------------

def _table_isotypical():
    t = isotypical_table()
    return t.to_json(), t.format()


def _table_weights():
    torus = cartan.torus()
    rows, lines = [], []
    for name in ("L0", "L1", "L2", "V0", "V1", "V2"):
        w = cartan.weight_of(get_operator(name), torus)
        adj = {"L": "Lam", "V": "A"}[name[0]] + name[1:]
        rows.append({"operator": name, "weight": list(w), "negative": adj})
        lines.append(f"alpha_{name:<3} = ({', '.join(map(str, w))})   alpha_{adj} = -alpha_{name}")
    return rows, "\n".join(lines)


def _table_mdeg():
    families = ("L", "Lam", "V", "A", "H", "S")
    rows, lines = [], []
    for fam in families:
        cells = []
        for j in range(3):
            name = f"{fam}{j}"
            d = cartan.mdeg_of_operator(get_operator(name))
            rows.append({"operator": name, "mdeg": list(d)})
            cells.append(f"mdeg({name}) = ({', '.join(map(str, d))})".ljust(26))
        lines.append("".join(cells).rstrip())
    return rows, "\n".join(lines)


def _table_diagonals():
    rows, cols = [], []
    for name in ("H0", "H1", "H2", "S0", "S1", "S2"):
        m = restrict(get_operator(name))
        if not m.is_diagonal():
            raise AssertionError(f"{name} is not diagonal on V")
        d = [format_scalar(x) for x in m.diagonal()]
        rows.append({"operator": name, "diagonal": d})
        cols.append([name] + d)
    grid = [[c[r] for c in cols] for r in range(7)]
    return rows, _grid(grid)


def cmd_table(args) -> int:
    build = {
        "isotypical": _table_isotypical,
        "weights": _table_weights,
        "mdeg": _table_mdeg,
        "diagonals": _table_diagonals,
    }[args.kind]
    data, text = build()
    if args.format == "json":
        _emit(dumps({"table": args.kind, "rows": data}))
    else:
        _emit(text)
    return EXIT_OK


# -- closure -------------------------------------------------------------------

def cmd_closure(args) -> int:
    names = [n.strip() for n in args.generators.split(",") if n.strip()]
    if not names:
        raise UsageError("--generators needs at least one operator name")
    ops = []
    for n in names:
        try:
            ops.append(get_operator(n))
        except UnknownOperator:
            raise UsageError(f"unknown operator {n!r}")
    try:
        rounds = default_max_rounds()
    except ValueError:
        raise UsageError("WSDALG_MAX_ROUNDS must be an integer")
    if rounds < 1:
        raise UsageError("WSDALG_MAX_ROUNDS must be >= 1")
    try:
        span = span_closure(ops, rounds)
    except ClosureNotReached as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.format == "json":
        _emit(dumps({"generators": names, "dim": span.dim, "rounds": span.rounds,
                     "max_rounds": rounds}))
    else:
        _emit(f"generators: {', '.join(names)}")
        _emit(f"dimension:  {span.dim}")
        _emit(f"rounds:     {span.rounds} (cap {rounds})")
    return EXIT_OK


# -- entry point -----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wsdalg", description="Exact operator algebra of a rank-2 WSD fiber.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fmt = dict(choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    v.add_argument("--format", **fmt)
    v.add_argument("-q", "--quiet", dest="verbose", action="store_false",
                   help="text output lists failures only")
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("matrix", help="print an operator matrix")
    m.add_argument("name")
    m.add_argument("--restrict-v", action="store_true", help="6x6 matrix on V instead of 64x64")
    m.add_argument("--format", **fmt)
    m.set_defaults(func=cmd_matrix)

    t = sub.add_parser("table", help="print a reference table")
    t.add_argument("kind", choices=TABLES)
    t.add_argument("--format", **fmt)
    t.set_defaults(func=cmd_table)

    c = sub.add_parser("closure", help="dimension of the Lie algebra generated by operators")
    c.add_argument("--generators", default=",".join(GENERATOR_NAMES),
                   help="comma-separated operator names (default: the twelve generators)")
    c.add_argument("--format", **fmt)
    c.set_defaults(func=cmd_closure)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"wsdalg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
