"""Command-line interface.

Exit codes: 0 ok, 2 usage or parse error, 3 domain error (input well formed
but not on the variety, not a valid group, ...), 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import __version__
from ._kernels import BACKEND
from .census import to_json, to_table
from .errors import DomainError, ParseError
from .graphstates import format_edges, graph_generators, graph_lagrangian, parse_graph, to_dot
from .groupaction import format_element
from .lagrangian import enumerate_lagrangians
from .minorvariety import IndexOrder, MinorPoint, minor_point, parse_point
from .orbits import PARTITION_BOUND, census, classify, partition
from .pauli import format_pauli, group_from_generators, parse_generators
from .verify import SUPPORTED, verify_tables

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_VERIFY = 4


class UsageError(Exception):
    pass


def _need_n(n: int, lo: int = 1, hi: int = PARTITION_BOUND) -> None:
    if not lo <= n <= hi:
        raise UsageError(f"--n must be in {lo}..{hi}, got {n}")


def _bits(v: int, width: int) -> str:
    return "".join(str((v >> i) & 1) for i in range(width))


def cmd_orbits(args, out) -> int:
    _need_n(args.n)
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")
    if args.format == "json":
        out.write(to_json(args.n))
    else:
        out.write(to_table(args.n))
    if args.dot:
        os.makedirs(args.dot, exist_ok=True)
        for r in partition(args.n):
            path = os.path.join(args.dot, f"n{args.n}_orbit{r.orbit_id:02d}.dot")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(to_dot(r.representative_graph, name=f"orbit{r.orbit_id}"))
    return EXIT_OK


def _classify_input(args):
    given = [a for a in ("edges", "point", "generators") if getattr(args, a) is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --edges, --point, --generators")
    if args.edges is not None:
        return parse_graph(args.edges, args.n)
    if args.point is not None:
        return parse_point(args.point, args.n, args.order)
    gens = parse_generators(args.generators)
    if any(g.n != args.n for g in gens):
        raise ParseError(f"generators must act on {args.n} qubits")
    return group_from_generators(gens, args.n)


def cmd_classify(args, out) -> int:
    _need_n(args.n)
    x = _classify_input(args)
    cl = classify(x)
    r = census(args.n).report(cl.orbit_id)
    out.write(f"orbit_id: {cl.orbit_id}\n")
    out.write(f"label: {r.label or '-'}\n")
    out.write(f"orbit_size: {r.size}\n")
    out.write(f"point (graded-lex): {cl.point.format('graded-lex')}\n")
    out.write(f"canonical point (graded-lex): {cl.canonical_point.format('graded-lex')}\n")
    out.write(f"canonical point (bitmask): {cl.canonical_point.format('bitmask')}\n")
    out.write(f"representative graph: {format_edges(r.representative_graph) or '(empty)'}\n")
    out.write(f"witness (point -> canonical point): {format_element(cl.witness)}\n")
    return EXIT_OK


def cmd_map(args, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    G = parse_graph(args.edges, args.n)
    n = G.n
    out.write("theta:\n")
    for row in G.theta.data:
        out.write("  " + " ".join(str((row >> j) & 1) for j in range(n)) + "\n")
    S = graph_generators(G, args.convention)
    out.write(f"generators ({args.convention}): {','.join(format_pauli(g) for g in S.generators)}\n")
    L = graph_lagrangian(G, args.convention)
    out.write("lagrangian basis (mu | nu, qubit 1 first):\n")
    for c in L.columns:
        out.write(f"  {_bits(c, n)} | {_bits(c >> n, n)}\n")
    p = minor_point(L)
    out.write(f"point (graded-lex): {p.format('graded-lex')}\n")
    out.write(f"point (bitmask): {p.format('bitmask')}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.n not in SUPPORTED:
        raise UsageError(f"published tables exist only for n in {SUPPORTED}")
    rep = verify_tables(args.n)
    out.write("\n".join(rep.lines()) + "\n")
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_enumerate(args, out) -> int:
    _need_n(args.n)
    Ls = list(enumerate_lagrangians(args.n))
    out.write(f"# n = {args.n}: {len(Ls)} Lagrangian subspaces\n")
    if args.points:
        order = IndexOrder(args.order)
        for p in sorted(minor_point(L).bits for L in Ls):
            out.write(MinorPoint(args.n, p).format(order) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="stabminors",
        description="Stabilizer states, Lagrangians and principal-minor orbits over F2.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbits", help="orbit census of the minor variety")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--threads", type=int, default=1, help="parallelism bound (kernels run single-threaded)")
    p.add_argument("--dot", metavar="DIR", help="write one DOT file per orbit representative")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("classify", help="orbit of a graph, point or stabilizer group")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edges", help='edge list such as "1-2,2-3"; "v-v" is a loop')
    p.add_argument("--point", help='minor vector such as "[1:0:0:1]"')
    p.add_argument("--generators", help='Pauli strings such as "ZXI,XZX,IXZ"')
    p.add_argument("--order", choices=[o.value for o in IndexOrder], default="graded-lex",
                   help="index order of --point (default graded-lex)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("map", help="graph -> generators -> Lagrangian -> point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edges", required=True)
    p.add_argument("--convention", choices=("minor-table", "standard"), default="minor-table",
                   help="minor-table: columns [I; theta]; standard: columns [theta; I]")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", help="recompute the published n = 4, 5 tables")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--paper-tables", action="store_true", help="compare with the published tables (the default source)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="count (and list) all Lagrangian subspaces")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--points", action="store_true", help="also print every minor vector")
    p.add_argument("--order", choices=[o.value for o in IndexOrder], default="graded-lex")
    p.set_defaults(func=cmd_enumerate)
    return ap


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
