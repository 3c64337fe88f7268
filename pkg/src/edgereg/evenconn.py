"""Even-connection: quadratic generators of colon ideals of edge-ideal powers.

Fix a graph G and a multiset of edges e_1 ... e_s.  Vertices u, v (possibly
equal) are even-connected with respect to the product e_1 ... e_s when some
alternating walk p_0 ... p_{2k+1} (k >= 1) joins them: every consecutive
pair is an edge of G, the edges at odd positions are drawn from the
multiset without exceeding multiplicities, and the walk starts and ends
with a free edge.  The colon ideal (I(G)^{s+1} : e_1...e_s) is generated in
degree two, by the edges of G together with the even-connected pairs; a
self-connected vertex u contributes the square u^2, which polarizes to a
whisker edge u-u'.

The search runs over states (current vertex, multiset usage vector,
parity).  Condition (3) bounds usage componentwise, so the state space has
at most n * prod(multiplicity_i + 1) * 2 elements and breadth-first search
with memoization is complete.  Any walk reaching an accepting state with
usage total k has exactly 2k+1 edges, because free and multiset edges
alternate; "longest possible" therefore means "maximal usage total".

Everything returned is certified: each pair carries an explicit walk and
edge assignment of maximal length, with ties broken by lexicographic path
order for determinism.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .graphs import Graph, closed_neighborhood, emit_graph6, from_edge_list
from .monomials import (EdgeMultiset, colon_by_monomial, edge_ideal, polar_name,
                        polarize, power)
from .reports import SuiteReport


@dataclass(frozen=True)
class EvenConnectionCertificate:
    """A witnessing walk p_0 ... p_{2k+1} plus the multiset edge assigned to
    each odd position (edge index 2l+1 joins path[2l+1] and path[2l+2])."""

    path: tuple[int, ...]
    assignments: tuple[tuple[int, tuple[int, int]], ...]

    @property
    def k(self) -> int:
        return (len(self.path) - 2) // 2

    def endpoints(self) -> tuple[int, int]:
        return self.path[0], self.path[-1]

    def check(self, g: Graph, m: EdgeMultiset) -> bool:
        """All four defining conditions, verified from scratch."""
        path = self.path
        if len(path) < 4 or len(path) % 2:
            return False
        if any(not g.has_edge(path[r], path[r + 1]) for r in range(len(path) - 1)):
            return False
        assigned = dict(self.assignments)
        k = self.k
        if sorted(assigned) != [2 * l + 1 for l in range(k)]:
            return False
        usage: dict[tuple[int, int], int] = {}
        for pos, e in assigned.items():
            if {path[pos], path[pos + 1]} != set(e):
                return False
            usage[e] = usage.get(e, 0) + 1
        counts = m.counts()
        return all(counts.get(e, 0) >= c for e, c in usage.items())

    def reversed(self) -> "EvenConnectionCertificate":
        path = self.path[::-1]
        last = len(self.path) - 2
        assigns = tuple(sorted((last - pos, e) for pos, e in self.assignments))
        return EvenConnectionCertificate(path, assigns)


@dataclass(frozen=True)
class ColonGraphResult:
    """The graph presenting (I^{s+1} : e_1...e_s): the original edges plus
    one certified edge per even-connected pair, with whisker vertices for
    self-connections."""

    graph: Graph
    new_pairs: tuple[tuple[int, int, EvenConnectionCertificate], ...]
    origin: tuple[Graph, EdgeMultiset]


def _reachable_states(g: Graph, m: EdgeMultiset, start: int):
    """BFS over (vertex, usage, parity); parity is the number of edges
    walked so far mod 2, so parity 0 moves along any edge of G and parity 1
    must consume a multiset edge at the current vertex."""
    distinct = sorted(m.counts())
    mult = [m.counts()[e] for e in distinct]
    zero = (0,) * len(distinct)
    first = (start, zero, 0)
    pred: dict[tuple, tuple | None] = {first: None}
    queue = deque([first])
    while queue:
        state = queue.popleft()
        v, usage, parity = state
        if parity == 0:
            for u in g.neighbors(v):
                nxt = (u, usage, 1)
                if nxt not in pred:
                    pred[nxt] = (state, None)
                    queue.append(nxt)
        else:
            for i, e in enumerate(distinct):
                if usage[i] < mult[i] and v in e:
                    u = e[0] if v == e[1] else e[1]
                    bumped = usage[:i] + (usage[i] + 1,) + usage[i + 1:]
                    nxt = (u, bumped, 0)
                    if nxt not in pred:
                        pred[nxt] = (state, e)
                        queue.append(nxt)
    return pred


def _reconstruct(pred, state) -> tuple[tuple[int, ...], tuple[tuple[int, tuple[int, int]], ...]]:
    chain = []
    cur = state
    while cur is not None:
        entry = pred[cur]
        chain.append((cur[0], None if entry is None else entry[1]))
        cur = None if entry is None else entry[0]
    chain.reverse()
    path = tuple(v for v, _ in chain)
    assigns = tuple(sorted((idx - 1, e) for idx, (_, e) in enumerate(chain) if e is not None))
    return path, assigns


def even_connected_pairs(g: Graph, m: EdgeMultiset
                         ) -> list[tuple[int, int, EvenConnectionCertificate]]:
    """All pairs (u, v), u <= v and u = v allowed, that are even-connected
    with respect to m, each with a certificate of maximal length."""
    m.validate_in(g)
    if m.size < 1:
        raise ValueError("the edge multiset must contain at least one edge")
    found: dict[tuple[int, int], EvenConnectionCertificate] = {}
    for start in range(g.n):
        pred = _reachable_states(g, m, start)
        accepts: dict[int, list] = {}
        for state in pred:
            v, usage, parity = state
            if parity == 1 and sum(usage) >= 1 and v >= start:
                accepts.setdefault(v, []).append(state)
        for v, states in accepts.items():
            kmax = max(sum(st[1]) for st in states)
            best = min(_reconstruct(pred, st) for st in states if sum(st[1]) == kmax)
            found[(start, v)] = EvenConnectionCertificate(*best)
    return [(u, v, found[(u, v)]) for u, v in sorted(found)]


def colon_graph(g: Graph, m: EdgeMultiset) -> ColonGraphResult:
    """The polarized graph of (I^{s+1} : e_1...e_s): E(G) plus the certified
    even-connected pairs, self-connections becoming whisker edges u-u'."""
    pairs = even_connected_pairs(g, m)
    new_pairs = tuple((u, v, c) for u, v, c in pairs
                      if u == v or not g.has_edge(u, v))
    selfs = sorted({u for u, v, _ in new_pairs if u == v})
    labels = list(g.labels) + [polar_name(g.labels[u], 2) for u in selfs]
    whisker = {u: g.n + i for i, u in enumerate(selfs)}
    edges = g.edges()
    edges += [(u, v) for u, v, _ in new_pairs if u != v]
    edges += [(u, whisker[u]) for u in selfs]
    graph = from_edge_list(g.n + len(selfs), edges, tuple(labels))
    return ColonGraphResult(graph, new_pairs, (g, m))


def check_even_connection_theorem(g: Graph, s: int) -> SuiteReport:
    """For every multiset m of s edges, compare the combinatorial colon
    graph against the monomial-arithmetic colon of I^{s+1} by the product:
    all minimal generators must be quadratic and the two edge sets must
    agree after polarization."""
    if s < 1:
        raise ValueError("s must be >= 1")
    report = SuiteReport("even-connection")
    report.graphs_tested = 1
    i = edge_ideal(g)
    if i.is_zero:
        return report
    big = power(i, s + 1)
    g6 = emit_graph6(g)
    for combo in itertools.combinations_with_replacement(g.edges(), s):
        m = EdgeMultiset.of(combo)
        colon = colon_by_monomial(big, m.product_monomial(g.labels))
        bad = [d for d in colon.generator_degrees() if d != 2]
        if bad:
            report.add_violation(g6, s, sorted(set(bad)), 2,
                                 f"non-quadratic colon generators for m={list(m.edges)}")
            continue
        combinatorial = edge_ideal(colon_graph(g, m).graph)
        algebraic, _ = polarize(colon)
        if not combinatorial.same_ideal_as(algebraic):
            report.add_violation(
                g6, s,
                sorted(str(x) for x in combinatorial.generators()),
                sorted(str(x) for x in algebraic.generators()),
                f"colon graph does not match the direct colon for m={list(m.edges)}")
    return report


def isolated_reduction_check(g: Graph, m: EdgeMultiset, w, u: int, *,
                             pairs=None, colon: ColonGraphResult | None = None) -> bool:
    """With G' the colon graph of (I^{s+1} : m) and u an endpoint of a
    longest even-connected walk whose endpoints avoid W, check that every
    edge of G' - W - N_{G'}[u] is an edge of G - N_G[u] under the copy-1
    embedding (the remaining new vertices must all be isolated).

    Returns True vacuously when no even-connected pair avoids W; raises if
    u is not an endpoint of a longest eligible walk.  `pairs` and `colon`
    allow exhaustive sweeps to reuse work across many W."""
    w = frozenset(w)
    if pairs is None:
        pairs = even_connected_pairs(g, m)
    eligible = [(a, b, c) for a, b, c in pairs if a not in w and b not in w]
    if not eligible:
        return True
    kmax = max(c.k for _, _, c in eligible)
    endpoints = {x for a, b, c in eligible if c.k == kmax for x in (a, b)}
    if u not in endpoints:
        raise ValueError("u is not an endpoint of a longest even-connected walk avoiding W")
    gp = (colon or colon_graph(g, m)).graph
    removed = set(w) | set(closed_neighborhood(gp, u))
    blocked = set(closed_neighborhood(g, u))
    for a, b in gp.edges():
        if a in removed or b in removed:
            continue
        if a >= g.n or b >= g.n or not g.has_edge(a, b):
            return False
        if a in blocked or b in blocked:  # cannot happen: N_G[u] is inside `removed`
            return False
    return True
