import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import reduced_homology as oracle_homology
from hic.chordal import (
    DecompositionError,
    EngineBudgetExceeded,
    EngineLimits,
    NotChordalError,
    check_decomposition_hypotheses,
    chordal_homotopy_type,
    low_degree_condition,
    decompose_at_vertex,
    replay_trace,
)
from hic.complex import build_ind_complex
from hic.fixtures import reverse_construction
from hic.generators import cycle_graph, path_graph, random_chordal, wheel_graph
from hic.graph import Graph, simplicial_vertices
from hic.homology import homology_of_type, reduced_homology
from hic.homotopy import CONTRACTIBLE, EMPTY, dims_mod_r_valid, sphere, wedge


def test_hypotheses_reverse_construction():
    G, ix = reverse_construction()
    assert check_decomposition_hypotheses(G, ix["v1"], 2).applicable


def test_hypotheses_fail_on_c4():
    report = check_decomposition_hypotheses(cycle_graph(4), 0, 2)
    assert not report.applicable
    with pytest.raises(DecompositionError):
        decompose_at_vertex(cycle_graph(4), 0, 2)


@given(st.integers(1, 10), st.integers(0, 5000), st.integers(1, 4))
def test_simplicial_vertices_are_always_applicable(n, seed, r):
    G = random_chordal(n, seed, connected=seed % 3 != 0)
    for v in simplicial_vertices(G):
        assert check_decomposition_hypotheses(G, v, r).applicable


def test_decompose_reverse_construction():
    G, ix = reverse_construction()
    parts = {S: H for S, H, _ in decompose_at_vertex(G, ix["v1"], 2)}
    key = lambda x: tuple(sorted((ix["v2"], ix[x])))
    assert parts[key("a1")].n == 0
    assert parts[key("b1")] == path_graph(3)
    assert parts[key("b2")] == path_graph(3)


def test_decompose_wheel3_hub():
    parts = decompose_at_vertex(wheel_graph(3), 3, 2)
    assert len(parts) == 3 and all(H.n == 0 for _, H, _ in parts)


def test_decompose_path_endpoint():
    # N[1] swallows all of P3; on P4 the far endpoint survives
    [(S, H, index)] = decompose_at_vertex(path_graph(3), 0, 1)
    assert S == (1,) and H.n == 0
    [(S, H, index)] = decompose_at_vertex(path_graph(4), 0, 1)
    assert S == (1,) and H.n == 1 and index == (3,)


def test_engine_examples():
    G, _ = reverse_construction()
    T, trace = chordal_homotopy_type(G, 2)
    assert T == wedge({1: 1, 3: 2})
    assert replay_trace(trace.root, 2) == T
    assert chordal_homotopy_type(path_graph(5), 2)[0] == CONTRACTIBLE
    assert chordal_homotopy_type(wheel_graph(3), 2)[0] == wedge({1: 3})
    assert chordal_homotopy_type(Graph(0, frozenset()), 2)[0] == EMPTY


@pytest.mark.parametrize("r", [2, 3])
def test_engine_paths(r):
    for n in range(1, 13):
        k, rem = divmod(n + 1, r + 2)
        expected = sphere(r * k - 1) if rem in (0, 1) and k else CONTRACTIBLE
        assert chordal_homotopy_type(path_graph(n), r)[0] == expected, n


def test_engine_rejects_non_chordal():
    with pytest.raises(NotChordalError) as err:
        chordal_homotopy_type(cycle_graph(5), 1)
    assert len(err.value.witness) == 5


def test_engine_budget():
    with pytest.raises(EngineBudgetExceeded) as err:
        chordal_homotopy_type(path_graph(12), 1, EngineLimits(max_nodes=2))
    assert err.value.trace.nodes == 3


def test_trace_json_shape():
    G, _ = reverse_construction()
    _, trace = chordal_homotopy_type(G, 2)
    d = trace.to_dict()
    assert d["r"] == 2 and d["root"]["kind"] == "split"
    assert len(d["root"]["branches"]) == 3
    assert d["root"]["result"] == {"type": "wedge", "spheres": [
        {"dim": 1, "count": 1}, {"dim": 3, "count": 2}]}


@given(st.integers(1, 9), st.integers(0, 10_000), st.integers(1, 3))
def test_engine_matches_independent_oracle(n, seed, r):
    G = random_chordal(n, seed, connected=seed % 4 != 0)
    T, trace = chordal_homotopy_type(G, r)
    expected = {g.d: (g.betti, g.torsion) for g in homology_of_type(T).groups}
    assert oracle_homology(G, r) == expected
    assert dims_mod_r_valid(T, r)
    assert chordal_homotopy_type(G, r, choose="max")[0] == T
    assert replay_trace(trace.root, r) == T


@given(st.integers(1, 12), st.integers(0, 10_000), st.integers(1, 3))
def test_engine_matches_library_homology(n, seed, r):
    G = random_chordal(n, seed)
    T, _ = chordal_homotopy_type(G, r)
    H = reduced_homology(build_ind_complex(G, r))
    assert H == homology_of_type(T) and H.torsion_free


def test_low_degree_condition_examples():
    star = Graph(4, frozenset({(0, 1), (0, 2), (0, 3)}))
    assert low_degree_condition(star, 0, 4)
    assert not low_degree_condition(path_graph(4), 1, 3)
    assert not low_degree_condition(star, 0, 3)
