from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from edgereg.graphs import (complete_graph, cycle_graph, enumerate_graphs,
                            from_edge_list, path_graph, relabel)
from edgereg.monomials import (EdgeMultiset, Monomial, MonomialIdeal,
                               colon_by_monomial, colon_graph_of,
                               cover_square_intersection, edge_ideal, ideal,
                               intersect, membership, minimal_vertex_covers,
                               minimalize, polar_name, polarize, power,
                               sum_ideals, symbolic_square, zero_ideal)

M = Monomial.parse


def xyz_triangle():
    return relabel(complete_graph(3), ("x", "y", "z"))


# Monomial basics -----------------------------------------------------------

def test_monomial_parse_and_str():
    m = M("x0^2*x1")
    assert str(m) == "x0^2*x1"
    assert m.degree() == 3
    assert M("1") == Monomial.one()


def test_monomial_arithmetic():
    a, b = M("x*y"), M("y*z")
    assert a.lcm(b) == M("x*y*z")
    assert a.gcd(b) == M("y")
    assert a.times(b) == M("x*y^2*z")
    assert M("x*y^2").over(M("y")) == M("x*y")
    assert M("x").divides(M("x^3*z"))
    assert not M("x^2").divides(M("x*y"))
    with pytest.raises(ValueError):
        M("x").over(M("y"))


@given(st.dictionaries(st.sampled_from("abcde"), st.integers(0, 4), max_size=5),
       st.dictionaries(st.sampled_from("abcde"), st.integers(0, 4), max_size=5))
def test_monomial_lcm_gcd_product_identity(d1, d2):
    a, b = Monomial.from_dict(d1), Monomial.from_dict(d2)
    assert a.lcm(b).times(a.gcd(b)) == a.times(b)


# ideals --------------------------------------------------------------------

def test_edge_ideal_triangle():
    i = edge_ideal(xyz_triangle())
    assert {str(m) for m in i.generators()} == {"x*y", "x*z", "y*z"}


def test_edge_ideal_single_edge_and_edgeless():
    assert [str(m) for m in edge_ideal(path_graph(2)).generators()] == ["x0*x1"]
    assert edge_ideal(from_edge_list(3, [])).is_zero


def test_minimalize():
    assert [str(m) for m in minimalize([M("x*y"), M("x*y*z")]).generators()] == ["x*y"]
    i = minimalize([M("x^2"), M("x*y"), M("y^2")])
    assert {str(m) for m in i.generators()} == {"x^2", "x*y", "y^2"}
    assert minimalize([]).is_zero


def test_power_principal():
    i = ideal([M("x*y")])
    assert [str(m) for m in power(i, 2).generators()] == ["x^2*y^2"]


def test_power_triangle_square():
    got = {str(m) for m in power(edge_ideal(xyz_triangle()), 2).generators()}
    assert got == {"x^2*y^2", "x^2*z^2", "y^2*z^2",
                   "x^2*y*z", "x*y^2*z", "x*y*z^2"}


def test_power_identity_and_errors():
    i = edge_ideal(cycle_graph(4))
    assert power(i, 1) == i
    with pytest.raises(ValueError):
        power(i, 0)


def test_colon_simple():
    i = ideal([M("x*y"), M("y*z")])
    assert {str(m) for m in colon_by_monomial(i, "y").generators()} == {"x", "z"}


def test_colon_path_square_witness():
    # the even-connection witness: x0 x3 enters (I(P5)^2 : x1 x2)
    i2 = power(edge_ideal(path_graph(5)), 2)
    colon = colon_by_monomial(i2, "x1*x2")
    assert membership(colon, M("x0*x3"))


def test_colon_by_one():
    i = edge_ideal(cycle_graph(5))
    assert colon_by_monomial(i, Monomial.one()) == i


def test_membership_trivia():
    i = ideal([M("x*y")])
    assert membership(i, M("x^2*y"))
    assert not membership(i, M("x*z"))
    assert not membership(zero_ideal(("x",)), M("x"))


@st.composite
def small_ideals(draw):
    nvars = draw(st.integers(1, 4))
    vars = tuple(f"x{i}" for i in range(nvars))
    ngens = draw(st.integers(1, 5))
    gens = []
    for _ in range(ngens):
        exps = draw(st.lists(st.integers(0, 3), min_size=nvars, max_size=nvars))
        if any(exps):
            gens.append(Monomial.from_dict(dict(zip(vars, exps))))
    if not gens:
        gens = [Monomial.variable(vars[0])]
    return ideal(gens, vars=vars)


@st.composite
def small_monomials(draw, max_exp=3):
    nvars = draw(st.integers(1, 4))
    exps = draw(st.lists(st.integers(0, max_exp), min_size=nvars, max_size=nvars))
    return Monomial.from_dict({f"x{i}": e for i, e in enumerate(exps)})


@given(small_ideals(), small_monomials(), small_monomials())
@settings(max_examples=300)
def test_colon_membership_duality(i, m, u):
    # u in (I : m)  <=>  u*m in I
    if membership(i, m):
        return  # the colon would be the unit ideal, which is out of scope
    colon = colon_by_monomial(i, m)
    assert membership(colon, u) == membership(i, u.times(m))


@given(small_ideals(), st.integers(1, 2))
@settings(max_examples=60, deadline=None)
def test_power_consistency(i, s):
    stepped = minimalize([a.times(b) for a in power(i, s).generators()
                          for b in i.generators()], vars=i.vars)
    assert power(i, s + 1) == stepped


# polarization ---------------------------------------------------------------

def test_polarize_square():
    p, vmap = polarize(ideal([M("x^2")]))
    assert [str(m) for m in p.generators()] == ["x*x.2"]
    assert vmap == {"x": "x", "x.2": "x"}


def test_polarize_mixed():
    p, _ = polarize(ideal([M("x^2*y"), M("x*y^2")]))
    assert {str(m) for m in p.generators()} == {"x*x.2*y", "x*y*y.2"}
    assert p.vars == ("x", "x.2", "y", "y.2")


def test_polarize_squarefree_identity():
    i = edge_ideal(cycle_graph(4))
    p, vmap = polarize(i)
    assert p == i
    assert vmap == {v: v for v in i.vars}


def test_polar_name():
    assert polar_name("x3", 1) == "x3"
    assert polar_name("x3", 2) == "x3.2"


# colon graph of an ideal -----------------------------------------------------

def test_colon_graph_of_whisker():
    g = colon_graph_of(ideal([M("x*y"), M("x^2")]))
    assert g.labels == ("x", "x.2", "y")
    named = {frozenset((g.labels[u], g.labels[v])) for u, v in g.edges()}
    assert named == {frozenset(("x", "y")), frozenset(("x", "x.2"))}


def test_colon_graph_of_edge_ideal_is_identity():
    for g in enumerate_graphs(5):
        if g.is_edgeless():
            continue
        assert colon_graph_of(edge_ideal(g)) == g


def test_colon_graph_of_rejects_cubics():
    with pytest.raises(ValueError):
        colon_graph_of(power(edge_ideal(path_graph(2)), 2))


# covers and the symbolic square ----------------------------------------------

def test_minimal_vertex_covers_examples():
    assert set(minimal_vertex_covers(complete_graph(3))) == {
        frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})}
    assert set(minimal_vertex_covers(path_graph(2))) == {frozenset({0}), frozenset({1})}
    assert set(minimal_vertex_covers(path_graph(4))) == {
        frozenset({1, 2}), frozenset({0, 2}), frozenset({1, 3})}


def test_minimal_vertex_covers_against_oracle():
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            assert set(minimal_vertex_covers(g)) == oracles.brute_minimal_vertex_covers(g)


def test_symbolic_square_triangle():
    k3 = xyz_triangle()
    sym = symbolic_square(k3)
    direct = sum_ideals(power(edge_ideal(k3), 2), ideal([M("x*y*z")]))
    assert sym.same_ideal_as(direct)
    assert membership(sym, M("x*y*z"))


def test_symbolic_square_triangle_free_collapses():
    for g in (cycle_graph(4), cycle_graph(5)):
        assert symbolic_square(g) == power(edge_ideal(g), 2)


def test_symbolic_square_equals_cover_intersection():
    for n in range(1, 5):
        for g in enumerate_graphs(n):
            assert symbolic_square(g).same_ideal_as(cover_square_intersection(g))


def test_symbolic_square_contained_in_edge_ideal():
    for g in enumerate_graphs(5):
        if g.is_edgeless():
            continue
        i = edge_ideal(g)
        assert all(membership(i, m) for m in symbolic_square(g).generators())


def test_intersect_idempotent():
    i = power(edge_ideal(cycle_graph(4)), 2)
    assert intersect(i, i) == i


# serialization and misc -------------------------------------------------------

def test_ideal_json_roundtrip():
    i = power(edge_ideal(cycle_graph(4)), 2)
    assert MonomialIdeal.from_json_dict(i.to_json_dict()) == i


def test_same_ideal_as_ignores_universe_order():
    a = ideal([M("x*y")], vars=("x", "y", "z"))
    b = ideal([M("x*y")], vars=("z", "y", "x"))
    assert a.same_ideal_as(b)
    assert a != b


def test_generator_order_is_graded_lex():
    i = ideal([M("y*z"), M("x"), M("x*y*z")], vars=("x", "y", "z"))
    assert [str(m) for m in i.generators()] == ["x", "y*z"]
    j = ideal([M("b^2"), M("a*c"), M("a*b")], vars=("a", "b", "c"))
    assert [str(m) for m in j.generators()] == ["a*b", "a*c", "b^2"]


def test_edge_multiset():
    m = EdgeMultiset.of([(2, 1), (1, 2), (0, 1)])
    assert m.edges == ((0, 1), (1, 2), (1, 2))
    assert m.size == 3
    assert m.counts() == {(0, 1): 1, (1, 2): 2}
    assert m.without((1, 2)).edges == ((0, 1), (1, 2))
    assert str(m.product_monomial(("x", "y", "z"))) == "x*y^3*z^2"
    m.validate_in(path_graph(3))  # all entries are edges of the path


def test_edge_multiset_validates_membership():
    m = EdgeMultiset.of([(0, 2)])
    with pytest.raises(Exception):
        m.validate_in(path_graph(3))
