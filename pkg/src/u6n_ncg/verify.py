"""Cross-check engine: exhaustive invariants against closed forms.

verify_all(n) runs every prediction for the non-commuting graph of U(6n)
next to its brute-force counterpart and returns a deterministic report.
Statuses:

  match                  predicted equals computed exactly
  mismatch               they differ and the prediction claims this n
  known_paper_exception  they differ but the closed form is flagged as
                         not applying at this n (only the eccentricity
                         polynomials at n = 1)
  skipped_cap            the exhaustive side would exceed its vertex cap

Failures never raise; they become entries, and the exhaustive side is the
authority whenever the two disagree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from time import perf_counter

from . import closed_forms, invariants
from .closed_forms import VALIDITY_FULL, VALIDITY_N_GE_2
from .graphs import find_induced, is_complete_multipartite, is_k_regular, non_commuting_graph
from .groups import FiniteGroup, U6nElement, omega_partition, u6n_group
from .invariants import Caps, DEFAULT_CAPS
from .polynomials import IntPolynomial, integer_roots


@dataclass(frozen=True)
class ReportEntry:
    name: str
    n: int
    predicted: object
    computed: object
    status: str
    elapsed_ms: int


@dataclass(frozen=True)
class VerificationReport:
    n: int
    entries: tuple[ReportEntry, ...]

    def has_mismatch(self) -> bool:
        return any(e.status == "mismatch" for e in self.entries)

    def counts(self) -> dict[str, int]:
        out = {"match": 0, "mismatch": 0, "known_paper_exception": 0, "skipped_cap": 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "entries": [
                {
                    "name": e.name,
                    "predicted": _json_value(e.predicted),
                    "computed": _json_value(e.computed),
                    "status": e.status,
                    "elapsed_ms": e.elapsed_ms,
                }
                for e in self.entries
            ],
        }

    def to_text(self) -> str:
        header = f"{'invariant':<36} {'status':<22} {'predicted':<30} {'computed':<30} {'ms':>6}"
        lines = [f"non-commuting graph of U(6n), n = {self.n}", header, "-" * len(header)]
        for e in self.entries:
            lines.append(
                f"{e.name:<36} {e.status:<22} "
                f"{_text_value(e.predicted):<30} {_text_value(e.computed):<30} "
                f"{e.elapsed_ms:>6}"
            )
        c = self.counts()
        lines.append(
            f"n={self.n}: {len(self.entries)} entries, {c['match']} match, "
            f"{c['mismatch']} mismatch, {c['known_paper_exception']} known_paper_exception, "
            f"{c['skipped_cap']} skipped_cap"
        )
        return "\n".join(lines)


def _normalize(value):
    if isinstance(value, (frozenset, set)):
        return tuple(sorted(value))
    if isinstance(value, list):
        return tuple(_normalize(v) for v in value)
    if isinstance(value, tuple):
        return tuple(_normalize(v) for v in value)
    return value


def _json_value(value):
    if isinstance(value, IntPolynomial):
        return {"terms": value.to_json_terms()}
    if isinstance(value, tuple):
        return [_json_value(v) for v in value]
    if value is None or isinstance(value, (bool, int, str)):
        return value
    raise TypeError(f"cannot serialise {value!r}")


def _text_value(value, limit: int = 30) -> str:
    if isinstance(value, IntPolynomial):
        text = str(value)
    elif isinstance(value, tuple):
        text = "[" + ", ".join(_text_value(v, limit=10_000) for v in value) + "]"
    elif value is None:
        text = "-"
    elif isinstance(value, bool):
        text = "true" if value else "false"
    else:
        text = str(value)
    if len(text) > limit:
        text = text[: limit - 3] + "..."
    return text


_CLASS_REPRESENTATIVES = {
    1: U6nElement(1, 0),
    2: U6nElement(1, 1),
    3: U6nElement(1, 2),
    4: U6nElement(0, 1),
}


def _labels_of(g: FiniteGroup, indices) -> tuple[str, ...]:
    return tuple(g.labels[i] for i in sorted(indices))


def _canonical_classes(label_classes) -> tuple[tuple[str, ...], ...]:
    return tuple(sorted(tuple(c) for c in label_classes))


def _common_value(values):
    """The single element of a collection, else the sorted distinct values
    (which then never equals a scalar prediction)."""
    distinct = sorted(set(values))
    return distinct[0] if len(distinct) == 1 else tuple(distinct)


def verify_all(n: int, caps: Caps = DEFAULT_CAPS) -> VerificationReport:
    """Run every closed form for U(6n) against the exhaustive computation."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    g = u6n_group(n)
    graph = non_commuting_graph(g)
    omega = omega_partition(g)
    v_count = graph.vertex_count
    # graph vertices keep element-index order, so this map is a bijection
    vertex_of = {x: i for i, x in enumerate(g.non_central())}
    element_classes = omega.classes()
    entries: list[ReportEntry] = []

    def add(name, predicted, compute, validity=VALIDITY_FULL, cap=None):
        predicted = _normalize(predicted)
        if cap is not None and v_count > cap:
            entries.append(ReportEntry(name, n, predicted, None, "skipped_cap", 0))
            return
        start = perf_counter()
        computed = _normalize(compute())
        elapsed = int((perf_counter() - start) * 1000)
        if computed == predicted:
            status = "match"
        elif validity == VALIDITY_N_GE_2 and n < 2:
            status = "known_paper_exception"
        else:
            status = "mismatch"
        entries.append(ReportEntry(name, n, predicted, computed, status, elapsed))

    # shared lazily-computed intermediates, so sibling entries do not redo
    # the expensive searches
    cache: dict[str, object] = {}

    def brute_resolving():
        if "resolving" not in cache:
            cache["resolving"] = invariants.resolving_polynomial(graph, cap=caps.resolving)
        return cache["resolving"]

    def brute_detour():
        if "detour" not in cache:
            cache["detour"] = invariants.detour_matrix(graph, cap=caps.detour)
        return cache["detour"]

    # centralizers and center
    for cls in (1, 2, 3, 4):
        rep = _CLASS_REPRESENTATIVES[cls]
        predicted = _labels_of(g, closed_forms.cf_centralizer(cls, rep, n))

        def compute(cls=cls):
            sets = {g.centralizer(x) for x in element_classes[cls - 1]}
            if len(sets) == 1:
                return _labels_of(g, sets.pop())
            return tuple(_labels_of(g, s) for s in sorted(sets, key=sorted))

        add(f"centralizer_omega{cls}", predicted, compute)

    add(
        "center",
        _labels_of(g, (6 * r for r in range(n))),
        lambda: _labels_of(g, g.center()),
    )

    # degrees and edges
    for cls in (1, 2, 3, 4):
        add(
            f"degree_omega{cls}",
            closed_forms.cf_degree(cls, n),
            lambda cls=cls: _common_value(
                graph.degree(vertex_of[x]) for x in element_classes[cls - 1]
            ),
        )
    add("edge_count", closed_forms.cf_edge_count(n), graph.edge_count)

    # complete multipartite structure against the omega classes
    def witness_sizes():
        witness = is_complete_multipartite(graph)
        return None if witness is None else tuple(witness.sizes())

    def witness_classes():
        witness = is_complete_multipartite(graph)
        if witness is None:
            return None
        return _canonical_classes(
            sorted(graph.labels[v] for v in c) for c in witness.classes
        )

    add("partition_sizes", closed_forms.cf_partition_sizes(n), witness_sizes)
    add(
        "partition_classes",
        _canonical_classes(sorted(_labels_of(g, c)) for c in element_classes),
        witness_classes,
    )

    # numeric invariants
    add("alpha", closed_forms.cf_alpha(n), lambda: invariants.independence_number(graph))
    add("tau", closed_forms.cf_tau(n), lambda: invariants.vertex_cover_number(graph))
    add("omega", closed_forms.cf_chi_omega(n), lambda: invariants.clique_number(graph))
    add(
        "chi",
        closed_forms.cf_chi_omega(n),
        lambda: invariants.chromatic_number(graph, cap=caps.chromatic),
        cap=caps.chromatic,
    )

    # forbidden induced subgraphs and regularity
    add("no_induced_c5", True, lambda: find_induced(graph, "cycle_5") is None)
    add("no_induced_p4", True, lambda: find_induced(graph, "path_4") is None)

    def regular_part():
        keep = sorted(
            vertex_of[x] for x in omega.omega1 | omega.omega2 | omega.omega3
        )
        return is_k_regular(graph.induced_subgraph(keep))

    add("regular_omega123", 2 * n, regular_part)
    add("full_graph_not_regular", True, lambda: is_k_regular(graph) is None)

    # resolving sets
    add(
        "metric_dimension",
        closed_forms.cf_metric_dimension(n),
        lambda: invariants.metric_dimension(graph, cap=caps.metric),
        cap=caps.metric,
    )
    add(
        "resolving_polynomial",
        closed_forms.cf_resolving_polynomial(n),
        lambda: brute_resolving()[0],
        cap=caps.resolving,
    )
    add(
        "resolving_sequence",
        closed_forms.cf_resolving_sequence(n),
        lambda: brute_resolving()[1].counts,
        cap=caps.resolving,
    )
    add(
        "resolving_roots",
        closed_forms.cf_resolving_roots(n),
        lambda: integer_roots(brute_resolving()[0]),
        cap=caps.resolving,
    )

    # detour distances
    def detour_values():
        matrix = brute_detour()
        return tuple(
            sorted(
                {
                    matrix[u][v]
                    for u in range(v_count)
                    for v in range(u + 1, v_count)
                }
            )
        )

    def brute_detour_polynomial():
        matrix = brute_detour()
        return IntPolynomial.from_terms(
            (matrix[u][v], 1) for u in range(v_count) for v in range(u + 1, v_count)
        )

    add("detour_distances", (5 * n - 1,), detour_values, cap=caps.detour)
    add(
        "detour_polynomial",
        closed_forms.cf_detour_polynomial(n),
        brute_detour_polynomial,
        cap=caps.detour,
    )
    add(
        "detour_index",
        closed_forms.cf_detour_index(n),
        lambda: brute_detour_polynomial().derivative_at_one(),
        cap=caps.detour,
    )

    # eccentricities; the closed forms carry the n >= 2 validity flag
    add(
        "eccentricities",
        (2,),
        lambda: tuple(sorted(set(invariants.eccentricities(graph)))),
        validity=VALIDITY_N_GE_2,
    )
    theta = closed_forms.cf_total_eccentricity_polynomial(n)
    add(
        "total_eccentricity_polynomial",
        theta.value,
        lambda: invariants.total_eccentricity_polynomial(graph),
        validity=theta.validity,
    )
    xi = closed_forms.cf_eccentric_connectivity_polynomial(n)
    add(
        "eccentric_connectivity_polynomial",
        xi.value,
        lambda: invariants.eccentric_connectivity_polynomial(graph),
        validity=xi.validity,
    )

    # counting polynomials
    add(
        "independence_polynomial",
        closed_forms.cf_independence_polynomial(n),
        lambda: invariants.independence_polynomial(graph, cap=caps.indep),
        cap=caps.indep,
    )
    add(
        "vertex_cover_polynomial",
        closed_forms.cf_vertex_cover_polynomial(n),
        lambda: invariants.vertex_cover_polynomial(graph, cap=caps.indep),
        cap=caps.indep,
    )

    return VerificationReport(n=n, entries=tuple(entries))


def report_to_json(reports: list[VerificationReport]) -> str:
    """One report object for a single n, an array for a range."""
    objs = [r.to_json_obj() for r in reports]
    return json.dumps(objs[0] if len(objs) == 1 else objs, indent=2)
