"""Combinatorial graph invariants and class predicates.

Everything here is exact and exhaustive: matching numbers by memoized
branching on vertex subsets, induced matchings by the same recursion with
closed neighborhoods removed, chordality by maximum cardinality search
with a verified perfect elimination ordering.  No polynomial-time
cleverness is attempted beyond what keeps ten-vertex graphs instant.

Local regularity is the regularity of the colon ideal (I(G) : x), which
the regularity engine computes directly; it is the quantity the power
bounds are phrased in.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from . import homology
from .graphs import (Graph, canonical_key, claw, complement, cricket,
                     delete_closed_neighborhood, delete_vertices, emit_graph6,
                     induced_subgraph)
from .monomials import Monomial, colon_by_monomial, edge_ideal
from .reports import SuiteReport

_CACHE: dict[tuple, object] = {}


def clear_caches() -> None:
    _CACHE.clear()


def _cached(g: Graph, name, fn: Callable[[], object]):
    key = (canonical_key(g), name)
    if key not in _CACHE:
        _CACHE[key] = fn()
    return _CACHE[key]


# ---------------------------------------------------------------------------
# matchings

def matching_number(g: Graph) -> int:
    """Maximum number of pairwise disjoint edges."""
    return int(_cached(g, "beta", lambda: _beta_rec(g, (1 << g.n) - 1, {})))


def _beta_rec(g: Graph, alive: int, memo: dict[int, int]) -> int:
    if alive in memo:
        return memo[alive]
    v = next((u for u in range(g.n) if alive >> u & 1 and g.adj[u] & alive), None)
    if v is None:
        memo[alive] = 0
        return 0
    best = _beta_rec(g, alive & ~(1 << v), memo)
    rest = g.adj[v] & alive
    while rest:
        low = rest & -rest
        u = low.bit_length() - 1
        rest ^= low
        best = max(best, 1 + _beta_rec(g, alive & ~(1 << v) & ~(1 << u), memo))
    memo[alive] = best
    return best


def induced_matching_number(g: Graph) -> int:
    """Maximum matching whose vertex span induces no extra edge.  Taking an
    edge at v forces the rest of the matching out of N[v] and N[u]."""
    return int(_cached(g, "nu", lambda: _nu_rec(g, (1 << g.n) - 1, {})))


def _nu_rec(g: Graph, alive: int, memo: dict[int, int]) -> int:
    if alive in memo:
        return memo[alive]
    v = next((u for u in range(g.n) if alive >> u & 1 and g.adj[u] & alive), None)
    if v is None:
        memo[alive] = 0
        return 0
    best = _nu_rec(g, alive & ~(1 << v), memo)
    rest = g.adj[v] & alive
    while rest:
        low = rest & -rest
        u = low.bit_length() - 1
        rest ^= low
        keep = alive & ~(g.adj[v] | g.adj[u] | (1 << v) | (1 << u))
        best = max(best, 1 + _nu_rec(g, keep, memo))
    memo[alive] = best
    return best


def is_gap_free(g: Graph) -> bool:
    """No two disjoint edges without a connecting edge between them."""
    edges = g.edges()
    for (a, b), (c, d) in itertools.combinations(edges, 2):
        if len({a, b, c, d}) < 4:
            continue
        if not (g.has_edge(a, c) or g.has_edge(a, d) or g.has_edge(b, c) or g.has_edge(b, d)):
            return False
    return True


# ---------------------------------------------------------------------------
# induced patterns and chordality

def has_induced_pattern(g: Graph, pattern: Graph) -> bool:
    if pattern.n > g.n:
        return False
    pkey = canonical_key(pattern)
    for verts in itertools.combinations(range(g.n), pattern.n):
        sub, _ = induced_subgraph(g, verts)
        if canonical_key(sub) == pkey:
            return True
    return False


def is_claw_free(g: Graph) -> bool:
    return bool(_cached(g, "claw_free", lambda: not has_induced_pattern(g, claw())))


def is_cricket_free(g: Graph) -> bool:
    return bool(_cached(g, "cricket_free", lambda: not has_induced_pattern(g, cricket())))


def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search followed by verification that the
    resulting ordering is a perfect elimination ordering."""
    return bool(_cached(g, "chordal", lambda: _chordal(g)))


def _chordal(g: Graph) -> bool:
    n = g.n
    if n <= 2:
        return True
    weight = [0] * n
    numbered = 0
    visit: list[int] = []
    for _ in range(n):
        z = max((v for v in range(n) if not numbered >> v & 1),
                key=lambda v: (weight[v], -v))
        visit.append(z)
        numbered |= 1 << z
        for y in range(n):
            if not numbered >> y & 1 and g.has_edge(y, z):
                weight[y] += 1
    peo = visit[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for i, v in enumerate(peo):
        later = [u for u in g.neighbors(v) if pos[u] > i]
        if not later:
            continue
        first = min(later, key=pos.__getitem__)
        for u in later:
            if u != first and not g.has_edge(first, u):
                return False
    return True


def is_co_chordal(g: Graph) -> bool:
    return is_chordal(complement(g))


def is_cameron_walker(g: Graph) -> bool:
    """Graphs whose induced matching number equals the matching number."""
    return induced_matching_number(g) == matching_number(g)


# ---------------------------------------------------------------------------
# local regularity

def local_regularity(g: Graph, x: int, field: homology.FieldSpec = homology.GF2) -> int:
    """Regularity of the colon ideal (I(G) : x).  The colon works out to
    the variables of N(x) plus the edge ideal of G - N[x]; the engine is
    given the colon ideal itself so there is a single source of truth.
    Returns 0 when the colon ideal is zero (edgeless graph)."""
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    i = edge_ideal(g)
    if i.is_zero:
        return 0
    colon = colon_by_monomial(i, Monomial.variable(g.labels[x]))
    return homology.regularity(colon, field)


def local_regularity_max(g: Graph, field: homology.FieldSpec = homology.GF2) -> int:
    """max over non-isolated vertices x of reg (I(G) : x); 0 for edgeless
    graphs.  Isolated vertices are excluded: for such x the colon is I(G)
    itself, which says nothing local (adding an isolated vertex never
    changes the edge ideal, so it must not change this invariant either)."""
    return int(_cached(g, ("lrm", field.characteristic),
                       lambda: max((local_regularity(g, x, field)
                                    for x in range(g.n) if g.degree(x) > 0),
                                   default=0)))


def is_locally_of_regularity_at_most(g: Graph, r: int,
                                     field: homology.FieldSpec = homology.GF2) -> bool:
    """True when reg (I(G):x) <= r for every non-isolated vertex x; r = 2
    is the "locally linear" predicate.  For r = 2 the answer is
    cross-checked against the co-chordality shortcut for each colon
    graph."""
    if r < 1:
        raise ValueError("r must be >= 1")
    result = local_regularity_max(g, field) <= r
    if r == 2:
        shortcut = all(_colon_graph_cochordal(g, x)
                       for x in range(g.n) if g.degree(x) > 0)
        if shortcut != result:
            raise RuntimeError(
                "internal consistency failure: engine and co-chordal shortcut disagree "
                f"on local regularity <= 2 for {g!r}")
    return result


def _colon_graph_cochordal(g: Graph, x: int) -> bool:
    # reg(I:x) <= 2 iff G - N[x] is edgeless or co-chordal
    h, _ = delete_closed_neighborhood(g, x)
    return h.is_edgeless() or is_co_chordal(h)


def is_locally_linear(g: Graph) -> bool:
    return is_locally_of_regularity_at_most(g, 2)


# ---------------------------------------------------------------------------
# invariant records

@dataclass(frozen=True)
class InvariantRecord:
    beta: int
    nu: int
    gap_free: bool
    claw_free: bool
    cricket_free: bool
    chordal: bool
    co_chordal: bool
    cameron_walker: bool
    locally_linear: bool
    local_reg_max: int

    def to_json_dict(self) -> dict:
        return {
            "beta": self.beta,
            "nu": self.nu,
            "gap_free": self.gap_free,
            "claw_free": self.claw_free,
            "cricket_free": self.cricket_free,
            "chordal": self.chordal,
            "co_chordal": self.co_chordal,
            "cameron_walker": self.cameron_walker,
            "locally_linear": self.locally_linear,
            "local_reg_max": self.local_reg_max,
        }


def invariant_record(g: Graph) -> InvariantRecord:
    return InvariantRecord(
        beta=matching_number(g),
        nu=induced_matching_number(g),
        gap_free=is_gap_free(g),
        claw_free=is_claw_free(g),
        cricket_free=is_cricket_free(g),
        chordal=is_chordal(g),
        co_chordal=is_co_chordal(g),
        cameron_walker=is_cameron_walker(g),
        locally_linear=is_locally_linear(g),
        local_reg_max=local_regularity_max(g),
    )


# ---------------------------------------------------------------------------
# hierarchy checks

def check_hierarchy_function(family: Sequence[Graph], f: Callable[[Graph], int],
                             field: homology.FieldSpec = homology.GF2) -> SuiteReport:
    """Verify that f is a regularity-controlling function on a family that
    is closed under vertex deletion and closed-neighborhood deletion.

    Violations are reported for: f(G - w) > f(G) or
    f(G - N[w]) > max(f(G) - 1, 2) at a non-isolated w, and
    reg I(G) > f(G) (skipped for edgeless members, whose edge ideal is
    zero).  Closure failures are reported as notes, not violations."""
    report = SuiteReport("hierarchy-function")
    members = list(family)
    keys = {canonical_key(g) for g in members}
    for g in members:
        report.graphs_tested += 1
        fg = f(g)
        if not g.is_edgeless():
            reg = homology.regularity(edge_ideal(g), field)
            if reg > fg:
                report.add_violation(emit_graph6(g), None, reg, fg, "reg I(G) > f(G)")
        for w in range(g.n):
            minus_w, _ = delete_vertices(g, [w])
            minus_nw, _ = delete_closed_neighborhood(g, w)
            for h in (minus_w, minus_nw):
                if canonical_key(h) not in keys:
                    report.notes.append(
                        f"family not closed: {emit_graph6(g)} at w={w} leaves the family")
            if g.degree(w) == 0:
                continue
            if f(minus_w) > fg:
                report.add_violation(emit_graph6(g), None, f(minus_w), fg,
                                     f"f(G-w) > f(G) at w={w}")
            if f(minus_nw) > max(fg - 1, 2):
                report.add_violation(emit_graph6(g), None, f(minus_nw), max(fg - 1, 2),
                                     f"f(G-N[w]) > max(f(G)-1, 2) at w={w}")
    return report
