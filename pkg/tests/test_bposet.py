import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from immvar.bposet import (
    Poset,
    build,
    faithful_cyclic_character,
    format_qpoly,
    is_rank_symmetric,
    polya_rank_generating,
    projection_check,
    rank_generating,
    witt_count,
)
from immvar.character import char_from_generator_exponents, trivial_character
from immvar.errors import BoundExceededError, NotOneDimensionalError
from immvar.exactalg import mobius_mu
from immvar.permgrp import Perm, act, alternating_group, closure, cyclic_group, symmetric_group, trivial_group, young_subgroup

from conftest import s3_standard
from oracles import hall_mobius, product_leq


def t(s):
    return tuple(int(c) for c in s)


A3_EDGES = {
    ("233", "333"), ("133", "233"), ("223", "233"), ("123", "133"), ("132", "133"), ("123", "223"),
    ("132", "223"), ("222", "223"), ("122", "123"), ("113", "123"), ("122", "132"), ("113", "132"),
    ("122", "222"), ("112", "122"), ("112", "113"), ("111", "112"),
}
LYNDON_EDGES = {
    ("112222", "122222"), ("121222", "122222"), ("112212", "112222"), ("111222", "112222"),
    ("112122", "112222"), ("112212", "121222"), ("111222", "121222"), ("112122", "121222"),
    ("111122", "112212"), ("111212", "112212"), ("111122", "111222"), ("111212", "111222"),
    ("111122", "112122"), ("111212", "112122"), ("111112", "111122"), ("111112", "111212"),
}


@pytest.fixture(scope="module")
def A3():
    return build(trivial_character(alternating_group(3)), 3)


@pytest.fixture(scope="module")
def lyndon():
    return build(faithful_cyclic_character(6), 2)


def test_a3_structure(A3):
    assert len(A3) == 11
    assert set(A3.covers()) == {(t(a), t(b)) for a, b in A3_EDGES}
    assert A3.graded
    assert rank_generating(A3) == (1, 1, 2, 3, 2, 1, 1)
    assert is_rank_symmetric(A3)
    assert A3.rank[(1, 1, 1)] == 0 and A3.rank[(3, 3, 3)] == 6
    ok, witness = A3.is_lattice()
    assert not ok
    assert set(witness["pair"]) == {(1, 2, 3), (1, 3, 2)}
    assert witness["minimal_upper_bounds"] == [(1, 3, 3), (2, 2, 3)]
    assert not A3.is_distributive()


def test_lyndon_poset(lyndon):
    assert witt_count(6, 2) == 9
    assert len(lyndon) == 9
    assert set(lyndon.covers()) == {(t(a), t(b)) for a, b in LYNDON_EDGES}
    assert lyndon.minimal() == [(1, 1, 1, 1, 1, 2)] and lyndon.maximal() == [(1, 2, 2, 2, 2, 2)]


def test_s2_poset_and_mobius():
    P = build(trivial_character(symmetric_group(2)), 3)
    assert P.elements == [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]
    assert rank_generating(P) == polya_rank_generating(symmetric_group(2), 2, 3) == (1, 1, 2, 1, 1)
    assert format_qpoly(rank_generating(P)) == "1 + q + 2*q^2 + q^3 + q^4"
    assert P.mobius((1, 1), (3, 3)) == 0
    assert P.mobius((1, 1), (1, 1)) == 1
    assert P.mobius((1, 1), (1, 2)) == -1
    with pytest.raises(ValueError):
        P.mobius((1, 3), (2, 2))


def test_s3_distributive():
    P = build(trivial_character(symmetric_group(3)), 3)
    assert P.is_lattice() == (True, None)
    assert P.is_distributive()


def test_trivial_group_is_product_order():
    P = build(trivial_character(trivial_group(3)), 2)
    assert len(P) == 8
    for x in P.elements:
        for y in P.elements:
            assert P.leq(x, y) == product_leq(x, y)
    assert rank_generating(P) == (1, 3, 3, 1)


GROUPS = [symmetric_group(2), symmetric_group(3), alternating_group(3), cyclic_group(4), young_subgroup(4, (2, 1, 1)),
          closure(4, [Perm.parse("3412")])]


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: f"k{G.k}o{len(G)}")
@pytest.mark.parametrize("n", [2, 3])
def test_leq_matches_definition(G, n):
    P = build(trivial_character(G), n)
    for x in P.elements:
        for y in P.elements:
            expected = any(product_leq(x, act(g, y)) for g in G)
            assert P.leq(x, y) == expected


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: f"k{G.k}o{len(G)}")
def test_mobius_matches_hall(G):
    P = build(trivial_character(G), 2 if G.k > 3 else 3)
    for x in P.elements:
        for y in P.elements:
            if P.leq(x, y):
                assert P.mobius(x, y) == hall_mobius(P.elements, P.leq, x, y)


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: f"k{G.k}o{len(G)}")
@pytest.mark.parametrize("n", [1, 2, 3])
def test_trivial_character_properties(G, n):
    P = build(trivial_character(G), n)
    burnside = sum(n ** len(g.cycles()) for g in G) // len(G)
    assert len(P) == burnside
    assert P.graded and is_rank_symmetric(P)
    coeffs = rank_generating(P)
    assert coeffs == polya_rank_generating(G, G.k, n)
    assert len(coeffs) - 1 == G.k * (n - 1)
    assert P.maximal() == [(n,) * G.k] and P.principal_ideal((n,) * G.k) == P.elements


def test_witt():
    assert witt_count(1, 5) == 5
    for p in (2, 3, 5, 7):
        for n in (2, 3):
            assert witt_count(p, n) == (n**p - n) // p
    for k in range(1, 9):
        for n in (1, 2, 3):
            brute = sum(mobius_mu(d) * n ** (k // d) for d in range(1, k + 1) if k % d == 0) // k
            assert witt_count(k, n) == brute
            if n**k <= 7000:
                assert len(build(faithful_cyclic_character(k), n)) == brute


def test_projection():
    assert projection_check(alternating_group(3), 3, 3)
    assert projection_check(trivial_group(3), 3, 2)
    assert projection_check(symmetric_group(4), 4, 2)


def test_ideals(A3):
    assert A3.interval((1, 1, 3), (1, 3, 3)) == [(1, 1, 3), (1, 2, 3), (1, 3, 2), (1, 3, 3)]
    assert A3.principal_ideal((1, 1, 1)) == [(1, 1, 1)]
    anti = Poset(["a", "b"], [[True, False], [False, True]])
    assert len(anti.order_ideals()) == 4
    chain = Poset.from_covers([1, 2, 3], [(1, 2), (2, 3)])
    assert len(chain.order_ideals()) == 4
    assert chain.is_lattice()[0] and chain.is_distributive()
    with pytest.raises(BoundExceededError):
        A3.order_ideals(cap=5)


def test_ideal_lattice_is_distributive():
    P = Poset.from_covers(["a", "b", "c"], [("a", "c"), ("b", "c")])
    J = P.ideal_lattice()
    assert len(J) == 5 and J.is_distributive()


def test_json_round_trip(A3, lyndon):
    for P in (A3, lyndon):
        Q = Poset.from_dict(__import__("json").loads(P.to_json()))
        assert Q.structure() == P.structure()
        assert (Q.L == P.L).all()
    assert A3.to_json() == build(trivial_character(alternating_group(3)), 3).to_json()


def test_dot_export(A3):
    dot = A3.to_dot()
    assert dot.count("->") == 16
    assert '"(1,1,1)" -> "(1,1,2)";' in dot
    assert dot.count("rank=same") == 7


def test_non_one_dimensional_rejected():
    with pytest.raises(NotOneDimensionalError):
        build(s3_standard(), 2)


def test_work_bound():
    with pytest.raises(BoundExceededError):
        build(trivial_character(symmetric_group(3)), 3, work_bound=10)


def test_axioms_checked_on_construction():
    with pytest.raises(ValueError):
        Poset([1, 2], [[True, True], [True, True]])


def test_exploratory_4321_scenario():
    G = closure(4, [Perm.parse("4321")])
    chi = char_from_generator_exponents(G, 2, {Perm.parse("4321"): 1})
    P = build(chi, 3)
    # regression values for the order-reversal character
    assert len(P) == 36
    assert P.graded
    assert P.minimal() == [(1, 1, 1, 2), (1, 1, 2, 1)]
    assert P.maximal() == [(2, 3, 3, 3), (3, 2, 3, 3)]
    assert len(P.covers()) == 84
    assert rank_generating(P) == (0, 2, 4, 8, 8, 8, 4, 2)
    assert is_rank_symmetric(P)
    assert not P.is_lattice()[0]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(GROUPS), st.integers(1, 3))
def test_partial_order_axioms(G, n):
    P = build(trivial_character(G), n)
    L = P.L
    N = len(P)
    for i, j in itertools.product(range(N), repeat=2):
        if L[i, j] and L[j, i]:
            assert i == j
    assert all(L[i, i] for i in range(N))
