"""Command-line frontend.

Subcommands: build (group summary), graph (single invariant), poly
(counting polynomials, brute or closed form), export (DOT/JSON), and
verify (full brute-vs-closed report).

Exit codes: 0 success, 1 usage or I/O error, 2 at least one mismatch in a
verification report.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from . import closed_forms, invariants
from .graphs import export_graph, non_commuting_graph
from .groups import group_from_json, u6n_group
from .invariants import Caps, DEFAULT_CAPS
from .verify import report_to_json, verify_all

_POLY_KINDS = ("resolving", "detour", "total-ecc", "ecc-conn", "independence", "vertex-cover")
_GRAPH_INVARIANTS = ("edges", "alpha", "tau", "omega", "chi", "beta", "ecc", "detour-index")


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the contract here is exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="u6n-ncg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct a group and print a summary")
    src = p_build.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=int, help="build U(6n) for this n")
    src.add_argument("--table", type=Path, help="load a Cayley-table JSON file")

    p_graph = sub.add_parser("graph", help="one invariant of the non-commuting graph")
    p_graph.add_argument("--n", type=int, required=True)
    p_graph.add_argument("--invariant", choices=_GRAPH_INVARIANTS, required=True)

    p_poly = sub.add_parser("poly", help="a counting polynomial of the graph")
    p_poly.add_argument("kind", choices=_POLY_KINDS)
    p_poly.add_argument("--n", type=int, required=True)
    p_poly.add_argument("--source", choices=("brute", "closed", "both"), default="brute")

    p_export = sub.add_parser("export", help="serialize the non-commuting graph")
    p_export.add_argument("--n", type=int, required=True)
    p_export.add_argument("--format", choices=("dot", "json"), required=True)

    p_verify = sub.add_parser("verify", help="brute force against every closed form")
    span = p_verify.add_mutually_exclusive_group(required=True)
    span.add_argument("--n", type=int)
    span.add_argument("--n-range", help="inclusive range A:B")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument(
        "--caps",
        help="override vertex caps, e.g. detour=15,resolving=16,chromatic=40,indep=24,metric=20",
    )
    return parser


def _parse_caps(text: str | None) -> Caps:
    if not text:
        return DEFAULT_CAPS
    valid = {f.name for f in dataclasses.fields(Caps)}
    overrides = {}
    for item in text.split(","):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in valid:
            raise ValueError(f"unknown cap override {item!r}; caps are {sorted(valid)}")
        overrides[key] = int(value)
    return dataclasses.replace(DEFAULT_CAPS, **overrides)


def _cmd_build(args) -> int:
    if args.n is not None:
        group = u6n_group(args.n)
    else:
        group = group_from_json(args.table.read_text())
    center = sorted(group.center())
    print(f"order: {group.order}")
    print(f"identity: {group.labels[group.identity]}")
    print(f"abelian: {'true' if group.is_abelian() else 'false'}")
    print(f"center_size: {len(center)}")
    print("center: " + ", ".join(group.labels[x] for x in center))
    if group.parameter_n is not None:
        print(f"parameter_n: {group.parameter_n}")
    return 0


def _cmd_graph(args) -> int:
    graph = non_commuting_graph(u6n_group(args.n))
    name = args.invariant
    if name == "edges":
        value = graph.edge_count()
    elif name == "alpha":
        value = invariants.independence_number(graph)
    elif name == "tau":
        value = invariants.vertex_cover_number(graph)
    elif name == "omega":
        value = invariants.clique_number(graph)
    elif name == "chi":
        value = invariants.chromatic_number(graph)
    elif name == "beta":
        value = invariants.metric_dimension(graph)
    elif name == "ecc":
        value = ",".join(str(e) for e in sorted(set(invariants.eccentricities(graph))))
    else:
        value = invariants.detour_index(graph)
    print(value)
    return 0


def _brute_poly(kind: str, graph):
    if kind == "resolving":
        return invariants.resolving_polynomial(graph)[0]
    if kind == "detour":
        return invariants.detour_polynomial(graph)
    if kind == "total-ecc":
        return invariants.total_eccentricity_polynomial(graph)
    if kind == "ecc-conn":
        return invariants.eccentric_connectivity_polynomial(graph)
    if kind == "independence":
        return invariants.independence_polynomial(graph)
    return invariants.vertex_cover_polynomial(graph)


def _closed_poly(kind: str, n: int):
    if kind == "resolving":
        return closed_forms.cf_resolving_polynomial(n)
    if kind == "detour":
        return closed_forms.cf_detour_polynomial(n)
    if kind == "total-ecc":
        return closed_forms.cf_total_eccentricity_polynomial(n).value
    if kind == "ecc-conn":
        return closed_forms.cf_eccentric_connectivity_polynomial(n).value
    if kind == "independence":
        return closed_forms.cf_independence_polynomial(n)
    return closed_forms.cf_vertex_cover_polynomial(n)


def _cmd_poly(args) -> int:
    if args.source in ("brute", "both"):
        graph = non_commuting_graph(u6n_group(args.n))
        brute = _brute_poly(args.kind, graph)
    if args.source == "brute":
        print(brute)
    elif args.source == "closed":
        print(_closed_poly(args.kind, args.n))
    else:
        print(f"brute: {brute}")
        print(f"closed: {_closed_poly(args.kind, args.n)}")
    return 0


def _cmd_export(args) -> int:
    graph = non_commuting_graph(u6n_group(args.n))
    print(export_graph(graph, args.format))
    return 0


def _cmd_verify(args) -> int:
    caps = _parse_caps(args.caps)
    if args.n is not None:
        span = [args.n]
    else:
        first, sep, last = args.n_range.partition(":")
        if not sep:
            raise ValueError(f"--n-range wants A:B, got {args.n_range!r}")
        span = list(range(int(first), int(last) + 1))
        if not span or span[0] < 1:
            raise ValueError(f"--n-range {args.n_range!r} is empty or starts below 1")
    reports = [verify_all(n, caps=caps) for n in span]
    if args.format == "json":
        print(report_to_json(reports))
    else:
        print("\n\n".join(r.to_text() for r in reports))
    return 2 if any(r.has_mismatch() for r in reports) else 0


_COMMANDS = {
    "build": _cmd_build,
    "graph": _cmd_graph,
    "poly": _cmd_poly,
    "export": _cmd_export,
    "verify": _cmd_verify,
}


def cli_main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"u6n-ncg: error: {exc}\n")
        return 1


def main() -> None:
    raise SystemExit(cli_main())
