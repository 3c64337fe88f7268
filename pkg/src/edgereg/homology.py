"""Graded Betti numbers and Castelnuovo-Mumford regularity, exactly.

Two independent routes compute the same Betti table:

* the primary route walks the lcm lattice of the minimal generators and
  takes reduced simplicial homology of the upper Koszul subcomplex at each
  multidegree (the complex of squarefree vectors t with x^(b-t) still in
  the ideal);
* the oracle route polarizes the ideal, forms the associated
  Stanley-Reisner complex, and sums reduced homology of induced
  subcomplexes over all vertex subsets.

The two code paths share nothing beyond the rank routines in `linalg`,
which makes silent homology bugs detectable by comparing them.

Conventions: the empty complex {emptyset} has homology of rank one in
dimension -1 and the void complex (no faces at all) has none anywhere.
Betti tables are tables of the ideal itself, so beta_{0,j} counts minimal
generators of degree j and regularity is max(j - i) over nonzero entries.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph, canonical_key
from .linalg import matrix_rank, rank_gf2
from .monomials import MonomialIdeal, edge_ideal, polarize, power

DEFAULT_FACE_BUDGET = 1 << 20
DEFAULT_VAR_BUDGET = 22
DEFAULT_LATTICE_BUDGET = 200_000


class BudgetError(RuntimeError):
    """A homology computation exceeded its configured size budget."""


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 (rationals) or a prime p."""

    characteristic: int = 2

    def __post_init__(self):
        c = self.characteristic
        if c == 0:
            return
        if c < 2 or any(c % d == 0 for d in range(2, int(c ** 0.5) + 1)):
            raise ValueError(f"characteristic must be 0 or prime, got {c}")


GF2 = FieldSpec(2)
QQ = FieldSpec(0)


# ---------------------------------------------------------------------------
# simplicial complexes

@dataclass(frozen=True)
class SimplicialComplex:
    """A complex presented by its facets (an inclusion antichain)."""

    vertices: tuple[str, ...]
    facets: tuple[frozenset[str], ...]

    @classmethod
    def from_faces(cls, vertices: Iterable[str], faces: Iterable[frozenset[str]]) -> "SimplicialComplex":
        verts = tuple(vertices)
        face_list = [frozenset(f) for f in faces]
        maximal = [f for f in face_list if not any(f < g for g in face_list)]
        uniq = sorted(set(maximal), key=lambda f: (len(f), sorted(f)))
        return cls(verts, tuple(uniq))

    def faces(self, face_budget: int = DEFAULT_FACE_BUDGET) -> set[frozenset[str]]:
        """Downward closure of the facets."""
        index = {v: k for k, v in enumerate(self.vertices)}
        masks = [sum(1 << index[v] for v in f) for f in self.facets]
        out = _closure(masks, face_budget)
        rev = {k: v for v, k in index.items()}
        return {frozenset(rev[b] for b in _mask_bits(m)) for m in out}


def independence_complex(g: Graph) -> SimplicialComplex:
    """Faces are the independent vertex sets of g; its Stanley-Reisner
    ideal is exactly the edge ideal."""
    indep = [m for m in range(1 << g.n)
             if all(g.adj[v] & m == 0 for v in _mask_bits(m))]
    indep_set = set(indep)
    facets = []
    for m in indep:
        if any((m | (1 << v)) in indep_set for v in range(g.n) if not m >> v & 1):
            continue
        facets.append(frozenset(g.labels[v] for v in _mask_bits(m)))
    return SimplicialComplex.from_faces(g.labels, facets)


@dataclass(frozen=True)
class HomologyProfile:
    """Ranks of reduced homology; zero ranks are omitted from `ranks`."""

    ranks: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "HomologyProfile":
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))

    def rank(self, d: int) -> int:
        return dict(self.ranks).get(d, 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.ranks)


def reduced_homology(c: SimplicialComplex, field: FieldSpec = GF2,
                     face_budget: int = DEFAULT_FACE_BUDGET) -> HomologyProfile:
    """Exact reduced homology ranks via boundary-matrix ranks."""
    index = {v: k for k, v in enumerate(c.vertices)}
    masks = [sum(1 << index[v] for v in f) for f in c.facets]
    faces = _closure(masks, face_budget)
    return HomologyProfile.from_dict(_profile_from_masks(faces, field.characteristic))


# ---------------------------------------------------------------------------
# internal machinery on bitmask faces

def _mask_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _closure(facet_masks: Iterable[int], face_budget: int) -> set[int]:
    faces: set[int] = set()
    work = 0
    for m in facet_masks:
        work += 1 << m.bit_count()
        if work > face_budget:
            raise BudgetError(f"face budget {face_budget} exceeded")
        sub = m
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & m
    return faces


def _profile_from_masks(faces: set[int], characteristic: int) -> dict[int, int]:
    """Reduced homology ranks of an explicit face set (void set -> empty).

    The empty face participates as the single (-1)-dimensional cell, which
    realizes the augmented chain complex: a nonvoid complex therefore gets
    rank(H_-1) = 1 exactly when it has no vertices.
    """
    if not faces:
        return {}
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort()
    dims = sorted(by_dim)
    max_d = dims[-1]
    boundary_rank: dict[int, int] = {}
    for d in range(0, max_d + 1):
        if d not in by_dim or d - 1 not in by_dim:
            boundary_rank[d] = 0
            continue
        target = {f: i for i, f in enumerate(by_dim[d - 1])}
        if characteristic == 2:
            rows = []
            for f in by_dim[d]:
                row = 0
                for v in _mask_bits(f):
                    row |= 1 << target[f ^ (1 << v)]
                rows.append(row)
            boundary_rank[d] = rank_gf2(rows)
        else:
            ncols = len(by_dim[d - 1])
            rows = []
            for f in by_dim[d]:
                row = [0] * ncols
                for pos, v in enumerate(_mask_bits(f)):
                    row[target[f ^ (1 << v)]] = -1 if pos % 2 else 1
                rows.append(row)
            boundary_rank[d] = matrix_rank(rows, characteristic)
    profile: dict[int, int] = {}
    for d in dims:
        h = len(by_dim[d]) - boundary_rank.get(d, 0) - boundary_rank.get(d + 1, 0)
        if h:
            profile[d] = h
    return profile


# Exponent vectors in the Betti hot loops are packed into integers with one
# 5-bit lane per variable (4 value bits plus a guard bit), so componentwise
# comparisons and maxima become a handful of integer operations.

LANE = 5
LANE_MAX = 15


def _lane_masks(nv: int) -> tuple[int, int, int]:
    hi = sum(1 << (LANE * k + LANE - 1) for k in range(nv))
    val = sum(LANE_MAX << (LANE * k) for k in range(nv))
    ones = sum(1 << (LANE * k) for k in range(nv))
    return hi, val, ones


def _pack(row: tuple[int, ...]) -> int:
    out = 0
    for k, e in enumerate(row):
        if e > LANE_MAX:
            raise BudgetError(f"exponent {e} exceeds the packed-lane maximum {LANE_MAX}")
        out |= e << (LANE * k)
    return out


def _packed_divides(g: int, b: int, hi: int) -> bool:
    # no lane of b - g borrows  <=>  g <= b componentwise
    return ((b | hi) - g) & hi == hi


def _packed_lcm(a: int, b: int, hi: int, val: int) -> int:
    ge = ((a | hi) - b) & hi          # guard bit per lane with a >= b
    sel = ge - (ge >> (LANE - 1))     # value mask per lane with a >= b
    return (a & sel) | (b & val & ~sel)


def _packed_excess_mask(b: int, g: int, hi: int, ones: int, nv: int) -> int:
    # vertex bitmask of the lanes where b - g >= 1 (the squarefree support
    # of the upper-Koszul facet attached to generator g at multidegree b)
    strict = ((b | hi) - g - ones) & hi
    mask = 0
    probe = LANE - 1
    for k in range(nv):
        if strict >> probe & 1:
            mask |= 1 << k
        probe += LANE
    return mask


def _packed_degree(b: int, nv: int) -> int:
    total = 0
    for _ in range(nv):
        total += b & LANE_MAX
        b >>= LANE
    return total


def _lcm_lattice(gens: list[int], hi: int, val: int, cap: int) -> set[int]:
    lattice = set(gens)
    frontier = list(lattice)
    shift = LANE - 1
    while frontier:
        fresh = []
        for a in frontier:
            a_hi = a | hi
            for g in gens:
                ge = (a_hi - g) & hi
                sel = ge - (ge >> shift)
                m = (a & sel) | (g & val & ~sel)
                if m not in lattice:
                    lattice.add(m)
                    fresh.append(m)
                    if len(lattice) > cap:
                        raise BudgetError(f"lcm lattice budget {cap} exceeded")
        frontier = fresh
    return lattice


# ---------------------------------------------------------------------------
# Betti tables

@dataclass(frozen=True)
class BettiTable:
    """Nonzero graded Betti numbers beta_{i,j} of a monomial ideal."""

    field: FieldSpec
    entries: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, field: FieldSpec, d: dict[tuple[int, int], int]) -> "BettiTable":
        return cls(field, tuple(sorted((k, v) for k, v in d.items() if v)))

    def betti(self, i: int, j: int) -> int:
        return dict(self.entries).get((i, j), 0)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def regularity(self) -> int:
        return max(j - i for (i, j), _ in self.entries)

    def to_json_dict(self) -> dict:
        return {
            "field": self.field.characteristic,
            "betti": [[i, j, r] for (i, j), r in self.entries],
            "reg": self.regularity(),
        }


def graded_betti(i: MonomialIdeal, field: FieldSpec = GF2,
                 face_budget: int = DEFAULT_FACE_BUDGET,
                 lattice_budget: int = DEFAULT_LATTICE_BUDGET) -> BettiTable:
    """Betti table via upper Koszul homology at every lcm-lattice point."""
    if i.is_zero:
        raise ValueError("Betti table of the zero ideal is undefined here")
    nv = len(i.vars)
    hi, val, ones = _lane_masks(nv)
    gens = [_pack(row) for row in i.gens]
    entries: dict[tuple[int, int], int] = {}
    for b in _lcm_lattice(gens, hi, val, lattice_budget):
        b_hi = b | hi
        masks = {_packed_excess_mask(b, g, hi, ones, nv)
                 for g in gens if (b_hi - g) & hi == hi}
        common = ~0
        for m in masks:
            common &= m
        if common:
            continue  # a vertex lies in every facet: the complex is a cone
        maximal = _maximal_masks(masks)
        if len(maximal) == 1:
            # a single facet is a full simplex: contractible unless it is
            # just the empty face, in which case b is a minimal generator
            if maximal[0] == 0:
                deg = _packed_degree(b, nv)
                entries[(0, deg)] = entries.get((0, deg), 0) + 1
            continue
        profile = _profile_from_masks(_closure(maximal, face_budget),
                                      field.characteristic)
        deg = _packed_degree(b, nv)
        for d, r in profile.items():
            key = (d + 1, deg)
            entries[key] = entries.get(key, 0) + r
    return BettiTable.from_dict(field, entries)


def _maximal_masks(masks: set[int]) -> list[int]:
    out = []
    for m in sorted(masks, key=lambda x: -x.bit_count()):
        if not any(m & k == m for k in out):
            out.append(m)
    return out


def hochster_oracle(i: MonomialIdeal, field: FieldSpec = GF2,
                    var_budget: int = DEFAULT_VAR_BUDGET,
                    face_budget: int = DEFAULT_FACE_BUDGET) -> BettiTable:
    """Betti table of the polarization read off the Stanley-Reisner complex:
    each vertex subset W contributes its induced subcomplex's reduced
    homology at dimension |W| - i - 2 to beta_{i,|W|}.

    Independent of `graded_betti` by construction; used as the second
    route in every dual-oracle check.
    """
    if i.is_zero:
        raise ValueError("Betti table of the zero ideal is undefined here")
    p, _ = polarize(i)
    used = sorted({k for row in p.gens for k, e in enumerate(row) if e})
    n = len(used)
    if n > var_budget:
        raise BudgetError(f"variable budget {var_budget} exceeded: {n} polarized variables")
    if (1 << n) > face_budget:
        raise BudgetError(f"face budget {face_budget} exceeded")
    remap = {orig: idx for idx, orig in enumerate(used)}
    supports = sorted({sum(1 << remap[k] for k, e in enumerate(row) if e) for row in p.gens})
    faces = [f for f in range(1 << n) if not any(s & f == s for s in supports)]
    entries: dict[tuple[int, int], int] = {}
    for w in range(1, 1 << n):
        inner = [s for s in supports if s & w == s]
        covered = 0
        for s in inner:
            covered |= s
        if w & ~covered:
            continue  # cone vertex inside W
        sub_faces = {f for f in faces if f & w == f}
        profile = _profile_from_masks(sub_faces, field.characteristic)
        j = w.bit_count()
        for d, r in profile.items():
            idx = j - d - 2
            if idx >= 0:
                entries[(idx, j)] = entries.get((idx, j), 0) + r
    return BettiTable.from_dict(field, entries)


# ---------------------------------------------------------------------------
# regularity

def regularity(i: MonomialIdeal, field: FieldSpec = GF2) -> int:
    """max { j - i : beta_{i,j} != 0 }; rejects the zero ideal."""
    return graded_betti(i, field).regularity()


_REG_POWER_CACHE: dict[tuple, int] = {}


def regularity_of_power(g: Graph, s: int = 1, field: FieldSpec = GF2) -> int:
    """Regularity of I(G)^s, memoized on the isomorphism class of g."""
    if s < 1:
        raise ValueError("s must be >= 1")
    key = (canonical_key(g), s, field.characteristic)
    if key not in _REG_POWER_CACHE:
        _REG_POWER_CACHE[key] = regularity(power(edge_ideal(g), s), field)
    return _REG_POWER_CACHE[key]


def clear_caches() -> None:
    _REG_POWER_CACHE.clear()


def cache_snapshot() -> list[list]:
    """JSON-ready dump of the regularity cache (used by the harness's
    on-disk cache)."""
    return [[n, code, s, char, reg]
            for ((n, code), s, char), reg in _REG_POWER_CACHE.items()]


def cache_restore(items: Iterable[Iterable]) -> None:
    for n, code, s, char, reg in items:
        _REG_POWER_CACHE[((int(n), int(code)), int(s), int(char))] = int(reg)
