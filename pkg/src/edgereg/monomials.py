"""Exact monomial-ideal arithmetic.

A monomial is a finitely supported exponent map on string variables.  A
monomial ideal stores an explicit ordered variable universe plus its
minimal generating antichain as dense exponent tuples, sorted in graded
lexicographic order so that serialized output is reproducible.

All the degrees in this project stay tiny (a handful of variables, degrees
bounded by a few times the power being taken), so everything below is
plain integer tuple arithmetic with no cleverness beyond minimalization.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .graphs import Graph, GraphError


@dataclass(frozen=True)
class Monomial:
    """Finitely supported exponent vector, e.g. Monomial.parse("x0^2*x1")."""

    exps: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if any(e <= 0 for _, e in self.exps):
            raise ValueError("exponents must be positive in normalized form")
        if list(self.exps) != sorted(self.exps):
            raise ValueError("exponent entries must be sorted by variable")

    @classmethod
    def from_dict(cls, d: Mapping[str, int]) -> "Monomial":
        return cls(tuple(sorted((v, e) for v, e in d.items() if e)))

    @classmethod
    def one(cls) -> "Monomial":
        return cls(())

    @classmethod
    def variable(cls, v: str, exp: int = 1) -> "Monomial":
        return cls.from_dict({v: exp})

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Accepts "1" or products like "x0*x1^2"."""
        text = text.strip()
        if text in ("", "1"):
            return cls.one()
        d: dict[str, int] = {}
        for tok in text.split("*"):
            name, _, e = tok.strip().partition("^")
            if not name:
                raise ValueError(f"bad monomial token {tok!r}")
            d[name] = d.get(name, 0) + (int(e) if e else 1)
        return cls.from_dict(d)

    def as_dict(self) -> dict[str, int]:
        return dict(self.exps)

    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def support(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.exps)

    def exponent(self, v: str) -> int:
        return dict(self.exps).get(v, 0)

    def divides(self, other: "Monomial") -> bool:
        o = other.as_dict()
        return all(o.get(v, 0) >= e for v, e in self.exps)

    def times(self, other: "Monomial") -> "Monomial":
        d = self.as_dict()
        for v, e in other.exps:
            d[v] = d.get(v, 0) + e
        return Monomial.from_dict(d)

    def over(self, other: "Monomial") -> "Monomial":
        """Exact division; raises if `other` does not divide self."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        d = self.as_dict()
        for v, e in other.exps:
            d[v] -= e
        return Monomial.from_dict(d)

    def gcd(self, other: "Monomial") -> "Monomial":
        o = other.as_dict()
        return Monomial.from_dict({v: min(e, o[v]) for v, e in self.exps if v in o})

    def lcm(self, other: "Monomial") -> "Monomial":
        d = self.as_dict()
        for v, e in other.exps:
            d[v] = max(d.get(v, 0), e)
        return Monomial.from_dict(d)

    def __str__(self):
        if not self.exps:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self.exps)


def _dense(m: Monomial, index: Mapping[str, int], nvars: int) -> tuple[int, ...]:
    row = [0] * nvars
    for v, e in m.exps:
        if v in index:
            row[index[v]] = e
        elif e:
            raise ValueError(f"variable {v} outside universe")
    return tuple(row)


def _sparse(row: tuple[int, ...], vars: tuple[str, ...]) -> Monomial:
    return Monomial(tuple(sorted((vars[i], e) for i, e in enumerate(row) if e)))


def _divides_row(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimal_rows(rows: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Divisibility antichain.  Candidates are scanned by degree, so a kept
    generator can only be divided by an earlier (lower-degree) kept one."""
    uniq = sorted(set(rows), key=lambda r: (sum(r), r))
    kept: list[tuple[int, ...]] = []
    by_degree: list[tuple[int, tuple[int, ...]]] = []
    for row in uniq:
        deg = sum(row)
        if any(_divides_row(k, row) for d, k in by_degree if d < deg):
            continue
        kept.append(row)
        by_degree.append((deg, row))
    return sorted(kept, key=lambda r: (sum(r), tuple(-e for e in r)))


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal generators (dense exponent rows) over an ordered universe."""

    vars: tuple[str, ...]
    gens: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variables in universe")
        for row in self.gens:
            if len(row) != len(self.vars) or any(e < 0 for e in row):
                raise ValueError("malformed generator row")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def generators(self) -> list[Monomial]:
        return [_sparse(row, self.vars) for row in self.gens]

    def generator_degrees(self) -> list[int]:
        return [sum(row) for row in self.gens]

    def contains(self, m: Monomial) -> bool:
        # variables of m outside the universe never hurt divisibility
        md = m.as_dict()
        return any(all(e <= md.get(v, 0) for v, e in zip(self.vars, row) if e)
                   for row in self.gens)

    def same_ideal_as(self, other: "MonomialIdeal") -> bool:
        """Equality of generating sets irrespective of universe order or of
        unused variables."""
        mine = {frozenset(m.exps) for m in self.generators()}
        theirs = {frozenset(m.exps) for m in other.generators()}
        return mine == theirs

    def to_json_dict(self) -> dict:
        return {"vars": list(self.vars), "gens": [list(r) for r in self.gens]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "MonomialIdeal":
        vars = tuple(d["vars"])
        return ideal([_sparse(tuple(r), vars) for r in d["gens"]], vars=vars)

    def __str__(self):
        return "(" + ", ".join(str(m) for m in self.generators()) + ")" if self.gens else "(0)"


def ideal(gens: Iterable[Monomial | Mapping[str, int]],
          vars: Iterable[str] | None = None) -> MonomialIdeal:
    """Minimalize `gens` into a MonomialIdeal.  When `vars` is omitted the
    universe is the sorted union of supports."""
    monos = [g if isinstance(g, Monomial) else Monomial.from_dict(g) for g in gens]
    if vars is None:
        universe = tuple(sorted(set().union(*(m.support() for m in monos)) if monos else set()))
    else:
        universe = tuple(vars)
    index = {v: i for i, v in enumerate(universe)}
    rows = [_dense(m, index, len(universe)) for m in monos]
    if any(sum(r) == 0 for r in rows):
        raise ValueError("unit generator: the unit ideal is out of scope")
    return MonomialIdeal(universe, tuple(_minimal_rows(rows)))


def minimalize(gens: Iterable[Monomial], vars: Iterable[str] | None = None) -> MonomialIdeal:
    return ideal(gens, vars=vars)


def zero_ideal(vars: Iterable[str] = ()) -> MonomialIdeal:
    return MonomialIdeal(tuple(vars), ())


# ---------------------------------------------------------------------------
# edge ideals and friends

def edge_ideal(g: Graph) -> MonomialIdeal:
    """I(G), generated by x_u x_v over the edges; the universe is every
    vertex label, including isolated vertices."""
    gens = []
    for u, v in g.edges():
        row = [0] * g.n
        row[u] = row[v] = 1
        gens.append(tuple(row))
    return MonomialIdeal(g.labels, tuple(_minimal_rows(gens)))


def power(i: MonomialIdeal, s: int) -> MonomialIdeal:
    """Minimal generators of i^s (s >= 1)."""
    if s < 1:
        raise ValueError("power requires s >= 1 (the unit ideal is out of scope)")
    if i.is_zero:
        return i
    rows = set(i.gens)
    for _ in range(s - 1):
        rows = {tuple(a + b for a, b in zip(r, g)) for r in rows for g in i.gens}
    return MonomialIdeal(i.vars, tuple(_minimal_rows(rows)))


def colon_by_monomial(i: MonomialIdeal, m: Monomial | str) -> MonomialIdeal:
    """(i : m) = minimalized { g / gcd(g, m) }."""
    if isinstance(m, str):
        m = Monomial.parse(m)
    md = m.as_dict()
    quotients = set()
    for row in i.gens:
        quotients.add(tuple(max(e - md.get(v, 0), 0) for v, e in zip(i.vars, row)))
    if any(sum(r) == 0 for r in quotients):
        raise ValueError("colon contains the unit: m lies in the ideal")
    return MonomialIdeal(i.vars, tuple(_minimal_rows(quotients)))


def intersect(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    """Pairwise lcm of generators, minimalized; requires a shared universe."""
    if i.vars != j.vars:
        raise ValueError("intersection needs a common variable universe")
    rows = {tuple(max(a, b) for a, b in zip(r, s)) for r in i.gens for s in j.gens}
    return MonomialIdeal(i.vars, tuple(_minimal_rows(rows)))


def sum_ideals(*ideals: MonomialIdeal) -> MonomialIdeal:
    """Ideal sum over the merged universe (left-to-right variable order)."""
    universe: list[str] = []
    for i in ideals:
        for v in i.vars:
            if v not in universe:
                universe.append(v)
    index = {v: k for k, v in enumerate(universe)}
    rows = []
    for i in ideals:
        for m in i.generators():
            rows.append(_dense(m, index, len(universe)))
    return MonomialIdeal(tuple(universe), tuple(_minimal_rows(rows)))


def membership(i: MonomialIdeal, m: Monomial) -> bool:
    return i.contains(m)


# ---------------------------------------------------------------------------
# polarization

def polar_name(v: str, k: int) -> str:
    """Name of the k-th polarized copy; copy 1 is the original variable."""
    return v if k == 1 else f"{v}.{k}"


def polarize(i: MonomialIdeal) -> tuple[MonomialIdeal, dict[str, str]]:
    """Squarefree polarization.  x_v^e becomes x_{v,1} ... x_{v,e} with the
    first copy identified with x_v; copies are inserted right after their
    original in the universe order.  Returns (ideal, new var -> original)."""
    peak = {v: 1 for v in i.vars}
    for row in i.gens:
        for v, e in zip(i.vars, row):
            peak[v] = max(peak[v], e)
    universe: list[str] = []
    vmap: dict[str, str] = {}
    for v in i.vars:
        for k in range(1, peak[v] + 1):
            name = polar_name(v, k)
            universe.append(name)
            vmap[name] = v
    index = {v: k for k, v in enumerate(universe)}
    rows = []
    for row in i.gens:
        out = [0] * len(universe)
        for v, e in zip(i.vars, row):
            for k in range(1, e + 1):
                out[index[polar_name(v, k)]] = 1
        rows.append(tuple(out))
    return MonomialIdeal(tuple(universe), tuple(_minimal_rows(rows))), vmap


def colon_graph_of(i: MonomialIdeal) -> Graph:
    """The graph whose edges are the generators of a quadratically generated
    ideal, after polarization: xy gives the edge {x, y} and a square x^2
    gives the whisker edge {x, x.2}.  Generators of degree != 2 are
    rejected, which signals that the input is not a colon of the expected
    shape."""
    for row in i.gens:
        if sum(row) != 2:
            raise ValueError(f"generator of degree {sum(row)} != 2")
    p, _ = polarize(i)
    index = {v: k for k, v in enumerate(p.vars)}
    edges = []
    for m in p.generators():
        support = sorted(m.support(), key=index.__getitem__)
        edges.append((index[support[0]], index[support[1]]))
    from .graphs import from_edge_list
    return from_edge_list(len(p.vars), edges, labels=p.vars)


# ---------------------------------------------------------------------------
# vertex covers and the symbolic square

def minimal_vertex_covers(g: Graph) -> list[frozenset[int]]:
    """All inclusion-minimal vertex covers, by brute force over subsets."""
    edges = g.edges()
    covers = []
    for size in range(g.n + 1):
        for sub in itertools.combinations(range(g.n), size):
            s = set(sub)
            if all(u in s or v in s for u, v in edges):
                if not any(c <= s for c in covers):
                    covers.append(frozenset(s))
    return sorted(covers, key=lambda c: (len(c), sorted(c)))


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    return [t for t in itertools.combinations(range(g.n), 3)
            if g.has_edge(t[0], t[1]) and g.has_edge(t[0], t[2]) and g.has_edge(t[1], t[2])]


def symbolic_square(g: Graph) -> MonomialIdeal:
    """I(G)^2 plus one cubic generator per triangle of G."""
    rows = set(power(edge_ideal(g), 2).gens)
    for a, b, c in triangles(g):
        row = [0] * g.n
        row[a] = row[b] = row[c] = 1
        rows.add(tuple(row))
    return MonomialIdeal(g.labels, tuple(_minimal_rows(rows)))


def cover_square_intersection(g: Graph) -> MonomialIdeal:
    """Independent route to the symbolic square: the intersection over all
    minimal vertex covers P of the squared cover ideal P^2."""
    covers = minimal_vertex_covers(g)
    if g.is_edgeless():
        return zero_ideal(g.labels)
    result: MonomialIdeal | None = None
    for cover in covers:
        gens = []
        for u in cover:
            row = [0] * g.n
            row[u] = 1
            gens.append(tuple(row))
        p = MonomialIdeal(g.labels, tuple(_minimal_rows(gens)))
        p2 = power(p, 2)
        result = p2 if result is None else intersect(result, p2)
    assert result is not None
    return result


# ---------------------------------------------------------------------------
# edge multisets (the s-fold products defining colon ideals)

@dataclass(frozen=True)
class EdgeMultiset:
    """A multiset of edges e_1 ... e_s, stored as a sorted tuple with
    repetition."""

    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        if norm != self.edges:
            raise ValueError("edges must be normalized and sorted; use EdgeMultiset.of")
        if any(u == v for u, v in self.edges):
            raise ValueError("loop edge in multiset")

    @classmethod
    def of(cls, edges: Iterable[tuple[int, int]]) -> "EdgeMultiset":
        return cls(tuple(sorted((min(u, v), max(u, v)) for u, v in edges)))

    @property
    def size(self) -> int:
        return len(self.edges)

    def counts(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for e in self.edges:
            out[e] = out.get(e, 0) + 1
        return out

    def without(self, edge: tuple[int, int]) -> "EdgeMultiset":
        """Remove one copy of `edge`."""
        edges = list(self.edges)
        edges.remove((min(edge), max(edge)))
        return EdgeMultiset(tuple(edges))

    def validate_in(self, g: Graph) -> None:
        for u, v in self.edges:
            if not (0 <= u < g.n and 0 <= v < g.n and g.has_edge(u, v)):
                raise GraphError(f"multiset edge {(u, v)} not in the graph")

    def product_monomial(self, labels: tuple[str, ...]) -> Monomial:
        d: dict[str, int] = {}
        for u, v in self.edges:
            d[labels[u]] = d.get(labels[u], 0) + 1
            d[labels[v]] = d.get(labels[v], 0) + 1
        return Monomial.from_dict(d)
