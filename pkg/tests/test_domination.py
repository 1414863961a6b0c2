import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from oracles import connected_sets, distance_domination, set_domination, strong_domination
from hic.domination import (
    DominationCertificate,
    InfeasibleDomination,
    check_certificate,
    distance_domination_number,
    domination_number,
    enumerate_connected_sets,
    set_domination_number,
    strong_domination_number,
    supports,
)
from hic.fixtures import long_star, reverse_construction
from hic.generators import complete_graph, cycle_graph, path_graph, wheel_graph
from hic.graph import Graph
from hic.setcover import InfeasibleCover, greedy_cover, min_set_cover


# --- set cover --------------------------------------------------------------

def test_min_set_cover_small():
    # greedy grabs the 4-element set first and then needs two more
    sets = [0b000111, 0b111000, 0b011011]
    assert len(greedy_cover(0b111111, sets)) == 3
    assert min_set_cover(0b111111, sets) == [0, 1]
    assert min_set_cover(0, sets) == []
    with pytest.raises(InfeasibleCover):
        min_set_cover(0b1000000, sets)


@given(st.lists(st.integers(1, 2 ** 7 - 1), min_size=1, max_size=9))
def test_min_set_cover_is_optimal(sets):
    universe = 0
    for s in sets:
        universe |= s
    best = min(
        k for k in range(len(sets) + 1)
        for pick in itertools.combinations(range(len(sets)), k)
        if _union(sets, pick) == universe
    )
    chosen = min_set_cover(universe, sets)
    assert len(chosen) == best and _union(sets, chosen) == universe


def _union(sets, pick):
    u = 0
    for i in pick:
        u |= sets[i]
    return u


# --- distance domination ----------------------------------------------------

def test_gamma_examples():
    assert distance_domination_number(long_star(), 2).value == 1
    assert distance_domination_number(long_star(), 2).witness == ((0,),)
    assert distance_domination_number(path_graph(4), 2).value == 1
    assert distance_domination_number(path_graph(4), 1).value == 2
    assert distance_domination_number(Graph(0, frozenset()), 1).value == 0


@given(graphs(max_n=8), st.integers(1, 3))
def test_gamma_matches_brute_force(G, r):
    cert = distance_domination_number(G, r)
    assert cert.value == distance_domination(G, r)
    assert check_certificate(G, cert)


@given(graphs(max_n=8), st.integers(1, 3))
def test_gamma_witness_is_minimal(G, r):
    cert = distance_domination_number(G, r)
    for drop in range(cert.value):
        smaller = DominationCertificate(
            "gamma_r", r, cert.value - 1, cert.witness[:drop] + cert.witness[drop + 1:])
        assert not check_certificate(G, smaller)


# --- connected sets ---------------------------------------------------------

def test_connected_sets_examples():
    assert enumerate_connected_sets(path_graph(3), 2) == [(0,), (1,), (2,), (0, 1), (1, 2)]
    assert len(enumerate_connected_sets(complete_graph(3), 3)) == 7
    assert enumerate_connected_sets(path_graph(3), 2, anchor=0) == [(0,), (0, 1)]


@given(graphs(max_n=8), st.integers(1, 4))
def test_connected_sets_match_brute_force(G, k):
    found = enumerate_connected_sets(G, k)
    assert found == connected_sets(G, k)
    assert len(set(found)) == len(found)


@given(graphs(min_n=1, max_n=8), st.integers(1, 4), st.data())
def test_anchored_connected_sets(G, k, data):
    v = data.draw(st.sampled_from(range(G.n)))
    assert enumerate_connected_sets(G, k, anchor=v) == [
        s for s in connected_sets(G, k) if v in s
    ]


# --- set domination ---------------------------------------------------------

def test_omega_examples():
    assert set_domination_number(long_star(), 2).value == 5
    for n in range(1, 6):
        for r in (1, 2, 3):
            assert set_domination_number(complete_graph(n), r).value == 1
    assert set_domination_number(path_graph(4), 1).value == 2
    assert domination_number(path_graph(4)).value == 2


@given(graphs(max_n=7), st.integers(1, 3))
def test_omega_matches_brute_force(G, r):
    cert = set_domination_number(G, r)
    assert cert.value == set_domination(G, r)
    assert check_certificate(G, cert)


@given(graphs(max_n=9), st.integers(1, 3))
def test_omega_dominates_gamma(G, r):
    # a connected piece of size <= r lies inside the distance-(r) ball of any member
    omega = set_domination_number(G, r).value
    assert omega >= distance_domination_number(G, r).value
    assert omega <= distance_domination_number(G, 1).value


@given(graphs(max_n=9))
def test_r1_invariants_coincide(G):
    g1 = distance_domination_number(G, 1).value
    assert g1 == set_domination_number(G, 1).value == domination_number(G).value


@given(graphs(max_n=9), st.integers(1, 3))
def test_gamma_monotone_in_r(G, r):
    assert distance_domination_number(G, r + 1).value <= distance_domination_number(G, r).value


# --- strong domination ------------------------------------------------------

def test_strong_domination_examples():
    assert strong_domination_number(complete_graph(2)).value == 2
    assert strong_domination_number(cycle_graph(4)).value == 2
    with pytest.raises(InfeasibleDomination):
        strong_domination_number(Graph(1, frozenset()))


@given(graphs(max_n=8))
def test_strong_domination_matches_brute_force(G):
    expected = strong_domination(G) if G.n else 0
    if any(G.degree(v) == 0 for v in G.vertices):
        with pytest.raises(InfeasibleDomination):
            strong_domination_number(G)
        return
    cert = strong_domination_number(G)
    assert cert.value == expected and check_certificate(G, cert)


def test_certificate_json_uses_int_ids():
    cert = set_domination_number(long_star(), 2)
    d = cert.to_dict()
    assert d["problem"] == "omega_r" and d["r"] == 2 and d["value"] == 5
    assert all(isinstance(v, int) for w in d["witness"] for v in w)


# --- supports ---------------------------------------------------------------

def test_supports_reverse_construction():
    G, ix = reverse_construction()
    fam = supports(G, ix["v1"], 2)
    expected = sorted(tuple(sorted((ix["v2"], ix[x]))) for x in ("a1", "b1", "b2"))
    assert fam.vertex_sets() == expected
    assert fam.connected and fam.dominating


def test_supports_r1_are_neighbours():
    G, ix = reverse_construction()
    v = ix["v2"]
    assert supports(G, v, 1).vertex_sets() == [(u,) for u in sorted(G.adj[v])]


def test_supports_wheel_hub():
    assert len(supports(wheel_graph(4), 4, 3)) == 4


def test_supports_c4():
    fam = supports(cycle_graph(4), 0, 2)
    assert fam.vertex_sets() == [(1, 2), (1, 3), (2, 3)]
    assert not fam.connected


@given(graphs(min_n=1, max_n=8), st.integers(1, 4), st.data())
def test_supports_definition(G, r, data):
    v = data.draw(st.sampled_from(range(G.n)))
    expected = [
        tuple(x for x in s if x != v) for s in connected_sets(G, r + 1)
        if len(s) == r + 1 and v in s
    ]
    assert supports(G, v, r).vertex_sets() == sorted(expected)
