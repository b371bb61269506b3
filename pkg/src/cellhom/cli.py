"""Command-line front end.

    cellhom homology --type A2 --space compact
    cellhom boundary --type A2 --element "s1 s2"
    cellhom complex --type G2 --format json
    cellhom order-graph --type A2 --format dot
    cellhom check --type B2 --space flag

Exit status: 0 on success, 2 for bad arguments or element strings, 3 when
the complex fails validation (the type is then unsupported).
"""
from __future__ import annotations

import argparse
import json
import sys

from .chain import (
    COMPACT,
    FLAG,
    boundary_of_cell,
    build_complex,
    cell_name,
    flag_boundary_of_cell,
    render_boundary,
    render_complex,
    render_flag_boundary,
)
from .checks import run_checks
from .errors import BoundarySquareError, CellhomError, ElementParseError, GroupTooLargeError
from .rootsys import build_root_system
from .snf import format_homology, homology, homology_json
from .ugroup import LiftedGroup, order_dot, parse_element
from .weyl import bruhat_subword_positions

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVALID = 3

COMMANDS = ("homology", "complex", "order-graph", "boundary", "check")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cellhom", description="Cellular homology of K and of the maximal flag manifold.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--type", dest="lie_type", required=True, help="Dynkin type, e.g. A2 or G2")
    p.add_argument("--space", choices=(COMPACT, FLAG), default=COMPACT)
    p.add_argument("--format", dest="fmt", choices=("text", "json", "dot"), default="text")
    p.add_argument("--element", help='cell for `boundary`, e.g. "s1 s2 c1"')
    p.add_argument("--out", help="write output here instead of stdout")
    return p


def _validate(args):
    if (args.command == "boundary") != (args.element is not None):
        raise _UsageError("--element is required for boundary and only allowed there")
    if args.fmt == "dot" and args.command not in ("order-graph", "complex"):
        raise _UsageError("--format dot is only available for order-graph and complex")


def _boundary(group: LiftedGroup, args) -> str:
    tokens = parse_element(args.element, group.rank)
    if args.space == FLAG:
        if any(kind == "c" for kind, _ in tokens):
            raise ElementParseError("flag cells are Weyl elements; c-tokens are not allowed")
        w = group.wg.from_word([i for _, i in tokens])
        if args.fmt == "json":
            rows = [
                {"position": i, "cell": list(v.word), "value": val}
                for i, v, val in flag_boundary_of_cell(group, w)
            ]
            return json.dumps({"cell": list(w.word), "boundary": rows})
        return render_flag_boundary(group, w)
    u = group.from_tokens(tokens)
    if args.fmt == "json":
        rows = [
            {
                "position": bc.position,
                "kind": bc.kind,
                "cell": str(bc.v),
                "sigma": bc.sigma,
                "value": bc.value,
            }
            for bc in boundary_of_cell(group, u)
        ]
        return json.dumps({"cell": str(u), "boundary": rows})
    return render_boundary(group, u)


def _complex_dot(cx, group) -> str:
    nodes = []
    for d in range(cx.top_dim + 1):
        for k, cell in enumerate(cx.cells_by_dim[d]):
            label = cell_name(cell) if cx.space == COMPACT else f"B({cell})"
            nodes.append((f"d{d}_{k}", label, d))
    edges = [
        (f"d{d}_{c}", f"d{d - 1}_{r}", str(v))
        for d in range(1, cx.top_dim + 1)
        for r, c, v in cx.delta(d).triplets()
    ]
    return order_dot(f"{cx.space}_{cx.lie_type}", nodes, edges)


def _order_graph(group: LiftedGroup, args) -> str:
    if args.space == COMPACT:
        g = group.order_graph()
        return g.to_dot() if args.fmt == "dot" else g.to_json()
    wg = group.wg
    edges = [(w, i, v) for w in wg for i, v in bruhat_subword_positions(wg, w)]
    if args.fmt == "dot":
        return order_dot(
            f"W_{group.rs.lie_type}",
            [(f"w{w.id}", str(w), w.length) for w in wg],
            [(f"w{w.id}", f"w{v.id}", str(i)) for w, i, v in edges],
        )
    return json.dumps(
        {
            "type": str(group.rs.lie_type),
            "vertices": [{"id": w.id, "label": str(w), "length": w.length} for w in wg],
            "edges": [{"from": w.id, "to": v.id, "position": i} for w, i, v in edges],
        }
    )


def run(args) -> tuple[int, str]:
    rs = build_root_system(args.lie_type)
    if args.command == "check":
        results = run_checks(rs, args.space)
        if args.fmt == "json":
            text = json.dumps([{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results])
        else:
            text = "\n".join(r.line() for r in results)
        return (EXIT_OK if all(r.ok for r in results) else EXIT_INVALID), text
    group = LiftedGroup(rs)
    if args.command == "boundary":
        return EXIT_OK, _boundary(group, args)
    if args.command == "order-graph":
        return EXIT_OK, _order_graph(group, args)
    cx = build_complex(group, args.space)
    if args.command == "complex":
        if args.fmt == "json":
            return EXIT_OK, cx.to_json()
        if args.fmt == "dot":
            return EXIT_OK, _complex_dot(cx, group)
        return EXIT_OK, render_complex(cx, group).rstrip("\n")
    groups = homology(cx)
    return EXIT_OK, homology_json(groups) if args.fmt == "json" else format_homology(groups)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        _validate(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        code, text = run(args)
    except (ValueError, ElementParseError) as exc:
        # bad type or element string
        print(f"cellhom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundarySquareError as exc:
        print(f"cellhom: type {args.lie_type} unsupported: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except GroupTooLargeError as exc:
        print(f"cellhom: type {args.lie_type} unsupported: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CellhomError as exc:
        print(f"cellhom: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
