import itertools
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_product_power, monomials_up_to_degree
from regpow import (
    Graph,
    IntermediateSpec,
    MonomialIdeal,
    colon_identity_holds,
    complete_graph,
    cycle_graph,
    differential_membership,
    edge_ideal,
    edge_packing_order,
    independent_set_colon_criterion,
    intermediate_ideal,
    path_graph,
    power_membership,
    sample_intermediates,
    symbolic_power,
    symbolic_power_of_ideal,
)

TRIANGLE = complete_graph(3)
C4 = cycle_graph(4)
C5 = cycle_graph(5)


@st.composite
def graphs(draw, nmin=2, nmax=5):
    n = draw(st.integers(nmin, nmax))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=8))
    return Graph.from_edges(n, edges)


# -- symbolic powers ------------------------------------------------------------

def test_symbolic_power_one_is_edge_ideal():
    for g in (TRIANGLE, C4, C5):
        assert symbolic_power(g, 1) == edge_ideal(g)


def test_symbolic_square_of_triangle():
    I = edge_ideal(TRIANGLE)
    expected = MonomialIdeal(3, I.power(2).gens + ((1, 1, 1),))
    assert symbolic_power(TRIANGLE, 2) == expected
    # the added generator is where the two constructions differ
    assert not I.power(2).contains((1, 1, 1))


def test_symbolic_square_of_bipartite_equals_power():
    assert symbolic_power(C4, 2) == edge_ideal(C4).power(2)


def test_symbolic_power_of_edgeless_warns_and_is_zero():
    g = Graph.from_edges(3, [])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        result = symbolic_power(g, 2)
    assert result.is_zero
    assert caught


def test_symbolic_power_of_general_ideal():
    # I = (x1, x2) is prime, so every symbolic power equals the power
    I = MonomialIdeal(3, [(1, 0, 0), (0, 1, 0)])
    assert symbolic_power_of_ideal(I, 2) == I.power(2)


@given(graphs(), st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_power_contained_in_symbolic(g, s):
    symbolic = symbolic_power(g, s)
    assert all(symbolic.contains(gen) for gen in edge_ideal(g).power(s).gens)


@given(graphs(nmax=4))
@settings(max_examples=30, deadline=None)
def test_bipartite_symbolic_equals_power(g):
    # 2-color test graphs: restrict to bipartite samples
    color = [None] * g.n
    bipartite = True
    for start in range(g.n):
        if color[start] is not None:
            continue
        color[start] = 0
        queue = [start]
        while queue and bipartite:
            u = queue.pop()
            for v in range(g.n):
                if g.has_edge(u, v):
                    if color[v] is None:
                        color[v] = 1 - color[u]
                        queue.append(v)
                    elif color[v] == color[u]:
                        bipartite = False
    if bipartite:
        for s in (2, 3):
            assert symbolic_power(g, s) == edge_ideal(g).power(s)


# -- differential membership ------------------------------------------------------

def test_power_generators_pass_differential_test():
    I = edge_ideal(C5)
    for s in (2, 3):
        for gen in I.power(s).gens:
            assert differential_membership(gen, I, s)


def test_triangle_product_is_in_symbolic_square():
    assert differential_membership((1, 1, 1), edge_ideal(TRIANGLE), 2)


def test_square_of_variable_fails():
    assert not differential_membership((2, 0), MonomialIdeal(2, [(1, 1)]), 2)


@given(graphs(nmax=4), st.integers(2, 3))
@settings(max_examples=25, deadline=None)
def test_differential_agrees_with_cover_intersection(g, s):
    I = edge_ideal(g)
    symbolic = symbolic_power(g, s)
    for f in monomials_up_to_degree(g.n, 2 * s + 2):
        assert differential_membership(f, I, s) == symbolic.contains(f)


# -- intermediate ideals ------------------------------------------------------------

def test_intermediate_none_is_power():
    spec = IntermediateSpec(TRIANGLE, 2, "none")
    assert intermediate_ideal(spec) == edge_ideal(TRIANGLE).power(2)


def test_intermediate_all_is_symbolic():
    spec = IntermediateSpec(TRIANGLE, 2, "all")
    assert intermediate_ideal(spec) == symbolic_power(TRIANGLE, 2)


def test_intermediate_explicit_selection():
    spec = IntermediateSpec(TRIANGLE, 2, ((1, 1, 1),))
    assert intermediate_ideal(spec) == symbolic_power(TRIANGLE, 2)


def test_intermediate_rejects_non_generator():
    spec = IntermediateSpec(TRIANGLE, 2, ((1, 0, 0),))
    with pytest.raises(ValueError):
        intermediate_ideal(spec)


def test_intermediate_random_is_deterministic():
    a = intermediate_ideal(IntermediateSpec(C5, 2, "random", seed=5))
    b = intermediate_ideal(IntermediateSpec(C5, 2, "random", seed=5))
    assert a == b


@given(graphs(), st.integers(2, 3), st.integers(0, 50))
@settings(max_examples=30, deadline=None)
def test_sampled_intermediates_sit_between(g, s, seed):
    base = edge_ideal(g).power(s)
    top = symbolic_power(g, s)
    for mid in sample_intermediates(g, s, 2, seed):
        assert all(mid.contains(gen) for gen in base.gens)
        assert all(top.contains(gen) for gen in mid.gens)


# -- edge packing order ---------------------------------------------------------------

def test_packing_order_of_c4_product():
    assert edge_packing_order(C4, (1, 1, 1, 1)) == 2


def test_packing_order_of_one():
    assert edge_packing_order(C4, (0, 0, 0, 0)) == 0


def test_packing_order_single_edge():
    assert edge_packing_order(Graph.from_edges(2, [(0, 1)]), (1, 1)) == 1


@given(graphs(nmax=4), st.tuples(*(st.integers(0, 2) for _ in range(4))))
@settings(max_examples=40, deadline=None)
def test_packing_order_monotone_under_divisibility(g, f):
    f = f[: g.n] + (0,) * max(0, g.n - 4)
    for j in range(g.n):
        if f[j]:
            smaller = tuple(e - (k == j) for k, e in enumerate(f))
            assert edge_packing_order(g, smaller) <= edge_packing_order(g, f)


# -- power membership -------------------------------------------------------------------

def test_power_membership_on_generators():
    I = edge_ideal(C5)
    for gen in I.power(2).gens:
        assert power_membership(gen, I, 2)


def test_power_membership_degree_too_small():
    assert not power_membership((1, 1), MonomialIdeal(2, [(1, 1)]), 2)


def test_power_membership_path_example():
    # oracle: the expansion of the square of the path ideal
    I = MonomialIdeal(3, [(1, 1, 0), (0, 1, 1)])
    expected = brute_product_power(I.gens, 2)
    assert any(all(g <= f for g, f in zip(gen, (2, 2, 1))) for gen in expected)
    assert power_membership((2, 2, 1), I, 2)


@given(graphs(nmax=4), st.integers(1, 3),
       st.tuples(*(st.integers(0, 2) for _ in range(4))))
@settings(max_examples=40, deadline=None)
def test_power_membership_matches_packing_order(g, s, f):
    f = f[: g.n] + (0,) * max(0, g.n - 4)
    assert power_membership(f, edge_ideal(g), s) == (edge_packing_order(g, f) >= s)


# -- colon membership criterion ------------------------------------------------------------

def test_criterion_neighborhood_degree_alone():
    # C4, F = {0}: the open neighborhood is {1, 3} and a puts weight 2 on it
    assert independent_set_colon_criterion(C4, 0b0001, (0, 1, 0, 1), 2)


def test_criterion_empty_face_uses_packing():
    assert independent_set_colon_criterion(C4, 0, (1, 1, 1, 1), 2)
    assert not independent_set_colon_criterion(C4, 0, (1, 1, 0, 0), 2)


def test_criterion_rejects_dependent_set():
    with pytest.raises(ValueError):
        independent_set_colon_criterion(C4, 0b0011, (0, 0, 0, 0), 1)


@given(graphs(nmax=4), st.integers(2, 3),
       st.tuples(*(st.integers(0, 2) for _ in range(4))))
@settings(max_examples=30, deadline=None)
def test_criterion_matches_radical_colon_membership(g, s, a):
    a = a[: g.n] + (0,) * max(0, g.n - 4)
    I = edge_ideal(g)
    colon_radical = I.power(s).radical_colon(a)
    if colon_radical.is_unit:
        return
    # necessity: independent minimal generators satisfy the inequality
    for gen in colon_radical.gens:
        mask = sum(1 << j for j, e in enumerate(gen) if e)
        if g.is_independent_set(mask):
            assert independent_set_colon_criterion(g, mask, a, s)
    # sufficiency: the inequality implies membership
    for mask in range(1 << g.n):
        if g.is_independent_set(mask):
            if independent_set_colon_criterion(g, mask, a, s):
                vec = tuple((mask >> j) & 1 for j in range(g.n))
                assert colon_radical.contains(vec)


# -- colon identities --------------------------------------------------------------------------

def test_identity_pair_on_c5():
    assert colon_identity_holds(C5, 2, "11", (0, 1))


def test_identity_square_times_variable_on_c5():
    assert colon_identity_holds(C5, 3, "21", (0, 1))


def test_identity_four_distinct_on_c4():
    assert colon_identity_holds(C4, 3, "1111", (0, 1, 2, 3))


def test_identity_validates_shape():
    with pytest.raises(ValueError):
        colon_identity_holds(C5, 2, "21", (0, 1))  # wrong s for pattern
    with pytest.raises(ValueError):
        colon_identity_holds(C5, 3, "1111", (0, 1, 2))  # wrong arity
    with pytest.raises(ValueError):
        colon_identity_holds(C5, 2, "11", (0, 0))  # repeated vertex


# -- low-degree colon stability -----------------------------------------------------------------

@given(graphs(nmax=4), st.integers(2, 3), st.integers(0, 20))
@settings(max_examples=30, deadline=None)
def test_low_degree_radical_colon_recovers_edge_ideal(g, s, seed):
    I = edge_ideal(g)
    ideals = [I.power(s), symbolic_power(g, s)]
    ideals += sample_intermediates(g, s, 1, seed)
    for J in ideals:
        for a in monomials_up_to_degree(g.n, s - 1):
            assert J.radical_colon(a) == I
