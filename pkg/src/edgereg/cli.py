"""Command-line interface.

Graphs come in as graph6 lines or as JSON edge-list objects
{"n": ..., "edges": [[u, v], ...]}, one per line, from a file or stdin.
All subcommands write JSON lines to stdout, except `verify`, which prints
a TSV summary and exits nonzero when a theorem suite reports violations.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator

from . import evenconn, homology, invariants, suites
from .graphs import Graph, emit_graph6, from_json_dict, parse_graph6
from .monomials import (EdgeMultiset, Monomial, colon_by_monomial, edge_ideal,
                        polarize, power, symbolic_square)


def _read_graphs(path: str) -> Iterator[Graph]:
    fh = sys.stdin if path == "-" else open(path, encoding="utf-8")
    try:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("{"):
                yield from_json_dict(json.loads(line))
            else:
                yield parse_graph6(line)
    finally:
        if fh is not sys.stdin:
            fh.close()


def _parse_edges(text: str) -> list[tuple[int, int]]:
    """Edge multiset syntax: "0-1,1-2,1-2" (repetition = multiplicity)."""
    out = []
    for tok in text.split(","):
        a, _, b = tok.strip().partition("-")
        out.append((int(a), int(b)))
    return out


def _cmd_invariants(args) -> int:
    for g in _read_graphs(args.input):
        record = {"graph6": emit_graph6(g), "n": g.n}
        record.update(invariants.invariant_record(g).to_json_dict())
        print(json.dumps(record))
    return 0


def _cmd_ideal(args) -> int:
    for g in _read_graphs(args.input):
        i = symbolic_square(g) if args.symbolic_square else edge_ideal(g)
        if args.power > 1:
            i = power(i, args.power)
        if args.colon:
            i = colon_by_monomial(i, Monomial.parse(args.colon))
        if args.polarize:
            i, _ = polarize(i)
        print(json.dumps(i.to_json_dict()))
    return 0


def _cmd_reg(args) -> int:
    field = homology.FieldSpec(args.char)
    for g in _read_graphs(args.input):
        i = power(edge_ideal(g), args.power)
        table = homology.graded_betti(i, field)
        out = table.to_json_dict()
        out["graph6"] = emit_graph6(g)
        out["power"] = args.power
        if args.oracle:
            other = homology.hochster_oracle(i, field)
            out["oracle_agrees"] = other == table
            if other != table:
                out["oracle_betti"] = other.to_json_dict()["betti"]
        print(json.dumps(out))
    return 0


def _cmd_colon_graph(args) -> int:
    edges = _parse_edges(args.edges)
    for g in _read_graphs(args.input):
        m = EdgeMultiset.of(edges)
        result = evenconn.colon_graph(g, m)
        print(json.dumps({
            "graph6": emit_graph6(result.graph),
            "labels": list(result.graph.labels),
            "new_pairs": [
                {"u": u, "v": v, "path": list(c.path),
                 "assignments": [[pos, list(e)] for pos, e in c.assignments]}
                for u, v, c in result.new_pairs
            ],
        }))
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "all":
        names = list(suites.THEOREM_SUITES)
    else:
        names = [args.suite]
    specs = [suites.SuiteSpec(name, n_max=args.n, s_max=args.s,
                              characteristic=args.char, graphs_file=args.graphs,
                              jobs=args.jobs)
             for name in names]
    reports, code = suites.run(specs)
    print("suite\tgraphs\tviolations\twall_time\tpass")
    for r in reports:
        print(f"{r.suite}\t{r.graphs_tested}\t{r.violations_total}"
              f"\t{r.wall_time:.2f}\t{'yes' if r.passed else 'NO'}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump([r.to_json_dict() for r in reports], fh, indent=2)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgereg",
        description="Exact edge-ideal computations and theorem verification "
                    "over small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="print one invariant record per input graph")
    p.add_argument("input", nargs="?", default="-", help="graph6/JSON lines file, or - for stdin")
    p.set_defaults(fn=_cmd_invariants)

    p = sub.add_parser("ideal", help="edge-ideal pipelines: power, colon, polarize, symbolic square")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--power", type=int, default=1, metavar="S")
    p.add_argument("--colon", metavar="MONOMIAL", help='e.g. "x0*x1"')
    p.add_argument("--polarize", action="store_true")
    p.add_argument("--symbolic-square", action="store_true",
                   help="start from the symbolic square instead of I(G)")
    p.set_defaults(fn=_cmd_ideal)

    p = sub.add_parser("reg", help="graded Betti table and regularity of I(G)^s")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--power", type=int, default=1, metavar="S")
    p.add_argument("--char", type=int, default=2, help="field characteristic (0 or prime)")
    p.add_argument("--oracle", action="store_true",
                   help="also run the independent oracle and compare")
    p.set_defaults(fn=_cmd_reg)

    p = sub.add_parser("colon-graph",
                       help="graph of (I^{s+1} : e_1...e_s) with certificates")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--edges", required=True, metavar="SPEC",
                   help='edge multiset, e.g. "0-1,1-2,1-2"')
    p.set_defaults(fn=_cmd_colon_graph)

    p = sub.add_parser("verify", help="run theorem-verification suites")
    p.add_argument("--suite", default="all",
                   help="suite id or 'all' (conjecture suites must be named explicitly); "
                        f"ids: {', '.join(suites.THEOREM_SUITES + suites.CONJECTURE_SUITES)}")
    p.add_argument("--n", type=int, default=6, help="enumerate graphs up to this size")
    p.add_argument("--s", type=int, default=2, help="largest power to test")
    p.add_argument("--char", type=int, default=2)
    p.add_argument("--graphs", help="graph6 file to sweep instead of enumerating")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the full JSON reports here")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
