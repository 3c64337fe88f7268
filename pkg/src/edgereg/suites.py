"""Theorem-verification suites over exhaustively enumerated small graphs.

Each suite sweeps a graph source (enumeration up to n_max, an explicit
list, or a graph6 file) and asserts one statement about regularity of
edge-ideal powers, reporting violations as replayable {graph6, s, lhs,
rhs, context} records.  A violation in any theorem suite means a bug in
this toolkit, not in the mathematics being checked.

The default sweep follows the budget rule "powers up to 2 for graphs on
six vertices, power 3 only up to five vertices"; `_s_values` applies it
uniformly.  The two conjecture suites are falsification searches: they
are excluded from `--suite all` and from the process exit code, since a
counterexample there would be a finding, not a failure.

Regularity and invariant values are memoized on canonical forms, and the
memo can persist across runs in the directory named by the
EDGEREG_CACHE_DIR environment variable.
"""
from __future__ import annotations

import itertools
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from . import evenconn, homology, invariants
from .graphs import (Graph, closed_neighborhood, emit_graph6, enumerate_graphs,
                     read_graph6_lines)
from .monomials import (EdgeMultiset, Monomial, MonomialIdeal, colon_by_monomial,
                        cover_square_intersection, edge_ideal, ideal, power,
                        sum_ideals, symbolic_square)
from .reports import SuiteReport

CACHE_ENV_VAR = "EDGEREG_CACHE_DIR"
CACHE_FILE = "regcache.json"


@dataclass(frozen=True)
class SuiteSpec:
    suite: str
    n_max: int = 6
    s_max: int = 2
    characteristic: int = 2
    graphs_file: str | None = None
    graphs: tuple[Graph, ...] | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.suite not in _CHECKERS:
            raise ValueError(f"unknown suite {self.suite!r}; known: {sorted(_CHECKERS)}")
        if not 1 <= self.s_max <= 3:
            raise ValueError("s_max must be between 1 and 3")
        if self.n_max > 8:
            raise ValueError("n_max above the enumeration bound 8")
        homology.FieldSpec(self.characteristic)  # validates


def _field(spec: SuiteSpec) -> homology.FieldSpec:
    return homology.FieldSpec(spec.characteristic)


def _s_values(g: Graph, s_max: int, start: int = 1) -> list[int]:
    # power 3 is only affordable up to five vertices
    return [s for s in range(start, s_max + 1) if s <= 2 or g.n <= 5]


def _viol(g: Graph, s: int | None, lhs, rhs, context: str) -> dict:
    return {"graph6": emit_graph6(g), "s": s, "lhs": lhs, "rhs": rhs, "context": context}


# ---------------------------------------------------------------------------
# per-graph checkers (each returns a list of violation dicts)

def _check_lower_bound(g: Graph, spec: SuiteSpec) -> list[dict]:
    if g.is_edgeless():
        return []
    out = []
    nu = invariants.induced_matching_number(g)
    for s in _s_values(g, spec.s_max):
        reg = homology.regularity_of_power(g, s, _field(spec))
        if reg < 2 * s + nu - 1:
            out.append(_viol(g, s, reg, 2 * s + nu - 1, "reg I^s < 2s + nu(G) - 1"))
    return out


def _check_matching_bound(g: Graph, spec: SuiteSpec) -> list[dict]:
    if g.is_edgeless():
        return []
    out = []
    beta = invariants.matching_number(g)
    for s in _s_values(g, spec.s_max):
        reg = homology.regularity_of_power(g, s, _field(spec))
        if reg > 2 * s + beta - 1:
            out.append(_viol(g, s, reg, 2 * s + beta - 1, "reg I^s > 2s + beta(G) - 1"))
    return out


def _check_cameron_walker(g: Graph, spec: SuiteSpec) -> list[dict]:
    if g.is_edgeless() or not invariants.is_cameron_walker(g):
        return []
    out = []
    nu = invariants.induced_matching_number(g)
    for s in _s_values(g, spec.s_max):
        reg = homology.regularity_of_power(g, s, _field(spec))
        if reg != 2 * s + nu - 1:
            out.append(_viol(g, s, reg, 2 * s + nu - 1,
                             "reg I^s != 2s + nu(G) - 1 on a graph with nu = beta"))
    return out


def _check_locally_linear(g: Graph, spec: SuiteSpec) -> list[dict]:
    if g.is_edgeless() or not invariants.is_locally_linear(g):
        return []
    out = []
    reg1 = homology.regularity_of_power(g, 1, _field(spec))
    if reg1 > 3:
        out.append(_viol(g, 1, reg1, 3, "locally linear graph with reg I > 3"))
    for s in _s_values(g, spec.s_max):
        reg = homology.regularity_of_power(g, s, _field(spec))
        if reg > 2 * s + reg1 - 2:
            out.append(_viol(g, s, reg, 2 * s + reg1 - 2,
                             "locally linear: reg I^s > 2s + reg I - 2"))
    return out


def _check_gapfree_local(g: Graph, spec: SuiteSpec) -> list[dict]:
    if g.is_edgeless() or not invariants.is_gap_free(g):
        return []
    out = []
    r = max(invariants.local_regularity_max(g, _field(spec)) + 1, 3)
    for s in _s_values(g, spec.s_max):
        reg = homology.regularity_of_power(g, s, _field(spec))
        if reg > 2 * s + r - 2:
            out.append(_viol(g, s, reg, 2 * s + r - 2,
                             f"gap-free, locally of regularity <= {r - 1}: reg I^s > 2s + r - 2"))
    return out


def _check_gapfree_locallinear(g: Graph, spec: SuiteSpec) -> list[dict]:
    if g.is_edgeless() or not invariants.is_gap_free(g) or not invariants.is_locally_linear(g):
        return []
    out = []
    for s in _s_values(g, spec.s_max, start=2):
        reg = homology.regularity_of_power(g, s, _field(spec))
        if reg != 2 * s:
            out.append(_viol(g, s, reg, 2 * s,
                             "gap-free locally linear: reg I^s != 2s"))
    return out


def _check_square(g: Graph, spec: SuiteSpec) -> list[dict]:
    if g.is_edgeless():
        return []
    out = []
    field = _field(spec)
    r = invariants.local_regularity_max(g, field) + 1
    square = power(edge_ideal(g), 2)
    for u, v in g.edges():
        colon = colon_by_monomial(square, Monomial.parse(f"{g.labels[u]}*{g.labels[v]}"))
        reg_colon = homology.regularity(colon, field)
        if reg_colon > r:
            out.append(_viol(g, 2, reg_colon, r,
                             f"reg (I^2 : e) > r for e={(u, v)}"))
    reg2 = homology.regularity_of_power(g, 2, field)
    if reg2 > r + 2:
        out.append(_viol(g, 2, reg2, r + 2, "reg I^2 > r + 2"))
    return out


def _check_symbolic_square(g: Graph, spec: SuiteSpec) -> list[dict]:
    out = []
    sym = symbolic_square(g)
    oracle = cover_square_intersection(g)
    if not sym.same_ideal_as(oracle):
        out.append(_viol(g, 2,
                         sorted(str(m) for m in sym.generators()),
                         sorted(str(m) for m in oracle.generators()),
                         "symbolic square formula != intersection of squared covers"))
    if not g.is_edgeless():
        field = _field(spec)
        r = invariants.local_regularity_max(g, field) + 1
        reg_sym = homology.regularity(sym, field)
        if reg_sym > r + 2:
            out.append(_viol(g, 2, reg_sym, r + 2, "reg I^(2) > r + 2"))
    return out


def _check_colon_induction(g: Graph, spec: SuiteSpec) -> list[dict]:
    if g.is_edgeless():
        return []
    out = []
    field = _field(spec)
    i = edge_ideal(g)
    for s in range(1, spec.s_max):
        if s + 1 > 2 and g.n > 5:
            continue
        current = power(i, s)
        nxt = power(i, s + 1)
        lhs = homology.regularity_of_power(g, s + 1, field)
        colon_regs = [homology.regularity(colon_by_monomial(nxt, m), field) + 2 * s
                      for m in current.generators()]
        rhs = max(colon_regs + [homology.regularity_of_power(g, s, field)])
        if lhs > rhs:
            out.append(_viol(g, s + 1, lhs, rhs,
                             "reg I^{s+1} > max(reg(I^{s+1}:m_l) + 2s, reg I^s)"))
    return out


def _leaf_edges(g: Graph) -> set[tuple[int, int]]:
    return {(u, v) for u, v in g.edges() if g.degree(u) == 1 or g.degree(v) == 1}


def _check_colon_structure(g: Graph, spec: SuiteSpec) -> list[dict]:
    if g.is_edgeless():
        return []
    out = []
    i = edge_ideal(g)
    leaves = _leaf_edges(g)
    for s in _s_values(g, spec.s_max, start=2):
        big = power(i, s)
        smaller = power(i, s - 1)
        for combo in itertools.combinations_with_replacement(g.edges(), s - 1):
            m = EdgeMultiset.of(combo)
            j = colon_by_monomial(big, m.product_monomial(g.labels))
            for e in set(m.edges) & leaves:
                reduced = m.without(e)
                rhs = colon_by_monomial(smaller, reduced.product_monomial(g.labels))
                if not j.same_ideal_as(rhs):
                    out.append(_viol(g, s,
                                     sorted(str(x) for x in j.generators()),
                                     sorted(str(x) for x in rhs.generators()),
                                     f"leaf reduction fails for m={list(m.edges)}, leaf={e}"))
            shielded = closed_neighborhood(g, set(m.edges))
            for w in range(g.n):
                if w in shielded:
                    continue
                lhs = colon_by_monomial(j, Monomial.variable(g.labels[w]))
                rhs = _colon_by_vertex_expected(g, m, w, s)
                if not lhs.same_ideal_as(rhs):
                    out.append(_viol(g, s,
                                     sorted(str(x) for x in lhs.generators()),
                                     sorted(str(x) for x in rhs.generators()),
                                     f"J:w identity fails for m={list(m.edges)}, w={w}"))
    return out


def _colon_by_vertex_expected(g: Graph, m: EdgeMultiset, w: int, s: int) -> MonomialIdeal:
    """I(G - N[w])^s : e_1...e_{s-1} plus the variables of the open
    neighborhood N(w), everything over the full variable universe."""
    blocked = closed_neighborhood(g, w)
    sub = ideal([Monomial.parse(f"{g.labels[u]}*{g.labels[v]}")
                 for u, v in g.edges() if u not in blocked and v not in blocked],
                vars=g.labels)
    if sub.is_zero:
        colon_part = sub
    else:
        colon_part = colon_by_monomial(power(sub, s), m.product_monomial(g.labels))
    var_part = ideal([Monomial.variable(g.labels[u]) for u in g.neighbors(w)],
                     vars=g.labels)
    return sum_ideals(colon_part, var_part)


def _check_even_connection(g: Graph, spec: SuiteSpec) -> list[dict]:
    if g.is_edgeless():
        return []
    out = []
    for s in _s_values(g, spec.s_max):
        out.extend(evenconn.check_even_connection_theorem(g, s).violations)
    return out


def _check_isolated_reduction(g: Graph, spec: SuiteSpec) -> list[dict]:
    if g.is_edgeless() or not invariants.is_gap_free(g):
        return []
    out = []
    sizes = range(1, max(2, spec.s_max))
    for size in sizes:
        for combo in itertools.combinations_with_replacement(g.edges(), size):
            m = EdgeMultiset.of(combo)
            pairs = evenconn.even_connected_pairs(g, m)
            colon = evenconn.colon_graph(g, m)
            for bits in range(1 << g.n):
                w = frozenset(v for v in range(g.n) if bits >> v & 1)
                eligible = [(a, b, c) for a, b, c in pairs if a not in w and b not in w]
                if not eligible:
                    continue
                kmax = max(c.k for _, _, c in eligible)
                endpoints = {x for a, b, c in eligible if c.k == kmax for x in (a, b)}
                for u in sorted(endpoints):
                    if not evenconn.isolated_reduction_check(g, m, w, u,
                                                             pairs=pairs, colon=colon):
                        out.append(_viol(g, size + 1, sorted(w), u,
                                         f"reduction keeps a foreign edge for m={list(m.edges)}"))
    return out


def _check_conjecture_a(g: Graph, spec: SuiteSpec) -> list[dict]:
    if g.is_edgeless():
        return []
    out = []
    field = _field(spec)
    reg1 = homology.regularity_of_power(g, 1, field)
    for s in _s_values(g, spec.s_max):
        reg = homology.regularity_of_power(g, s, field)
        if reg > 2 * s + reg1 - 2:
            out.append(_viol(g, s, reg, 2 * s + reg1 - 2,
                             "counterexample candidate: reg I^s > 2s + reg I - 2"))
    return out


def _check_conjecture_a_prime(g: Graph, spec: SuiteSpec) -> list[dict]:
    if g.is_edgeless():
        return []
    out = []
    field = _field(spec)
    r = max(invariants.local_regularity_max(g, field) + 1, 2)
    for s in _s_values(g, spec.s_max):
        reg = homology.regularity_of_power(g, s, field)
        if reg > 2 * s + r - 2:
            out.append(_viol(g, s, reg, 2 * s + r - 2,
                             "counterexample candidate: reg I^s > 2s + r - 2"))
    return out


THEOREM_SUITES = (
    "lower-bound",
    "matching-bound",
    "cameron-walker",
    "locally-linear",
    "gapfree-local",
    "gapfree-locallinear",
    "square",
    "symbolic-square",
    "colon-induction",
    "colon-structure",
    "even-connection",
    "isolated-reduction",
)

CONJECTURE_SUITES = ("conjecture-a", "conjecture-a-prime")

_CHECKERS = {
    "lower-bound": _check_lower_bound,
    "matching-bound": _check_matching_bound,
    "cameron-walker": _check_cameron_walker,
    "locally-linear": _check_locally_linear,
    "gapfree-local": _check_gapfree_local,
    "gapfree-locallinear": _check_gapfree_locallinear,
    "square": _check_square,
    "symbolic-square": _check_symbolic_square,
    "colon-induction": _check_colon_induction,
    "colon-structure": _check_colon_structure,
    "even-connection": _check_even_connection,
    "isolated-reduction": _check_isolated_reduction,
    "conjecture-a": _check_conjecture_a,
    "conjecture-a-prime": _check_conjecture_a_prime,
}


# ---------------------------------------------------------------------------
# runner

def _graph_source(spec: SuiteSpec) -> list[Graph]:
    if spec.graphs is not None:
        return list(spec.graphs)
    if spec.graphs_file is not None:
        with open(spec.graphs_file, encoding="ascii") as fh:
            return list(read_graph6_lines(fh))
    out: list[Graph] = []
    for n in range(1, spec.n_max + 1):
        out.extend(enumerate_graphs(n))
    return out


def _run_one(spec: SuiteSpec, g: Graph) -> list[dict]:
    return _CHECKERS[spec.suite](g, spec)


def run_suite(spec: SuiteSpec) -> SuiteReport:
    start = time.perf_counter()
    graphs = _graph_source(spec)
    report = SuiteReport(spec.suite, conjecture=spec.suite in CONJECTURE_SUITES)
    if spec.jobs > 1 and len(graphs) > 1:
        chunk = max(1, len(graphs) // (4 * spec.jobs))
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            batches = list(pool.map(partial(_run_one, spec), graphs, chunksize=chunk))
    else:
        batches = [_run_one(spec, g) for g in graphs]
    for viols in batches:
        report.graphs_tested += 1
        for v in viols:
            report.add_violation(**v)
    report.wall_time = time.perf_counter() - start
    return report


def run(specs: list[SuiteSpec]) -> tuple[list[SuiteReport], int]:
    """Run suites in order; exit code 0 iff every theorem suite passes.
    Conjecture suites are reported but never affect the exit code."""
    _load_disk_cache()
    reports = [run_suite(spec) for spec in specs]
    _save_disk_cache()
    failed = any(not r.passed for r in reports if not r.conjecture)
    return reports, 1 if failed else 0


def clear_all_caches() -> None:
    invariants.clear_caches()
    homology.clear_caches()


def _cache_path() -> str | None:
    directory = os.environ.get(CACHE_ENV_VAR)
    if not directory:
        return None
    return os.path.join(directory, CACHE_FILE)


def _load_disk_cache() -> None:
    path = _cache_path()
    if not path or not os.path.exists(path):
        return
    try:
        with open(path, encoding="ascii") as fh:
            homology.cache_restore(json.load(fh))
    except (OSError, ValueError):
        pass  # a broken cache must never break a run


def _save_disk_cache() -> None:
    path = _cache_path()
    if not path:
        return
    try:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w", encoding="ascii") as fh:
            json.dump(homology.cache_snapshot(), fh)
    except OSError:
        pass
