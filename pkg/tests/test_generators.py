import pytest

from hic.fixtures import LONG_STAR_LABELS, long_star
from hic.generators import (
    FAMILIES,
    GeneratorSpec,
    complete_graph,
    cycle_graph,
    erdos_renyi,
    generate_graph,
    path_graph,
    random_chordal,
    star_of_paths,
    wheel_graph,
)
from hic.graph import GraphError


def test_wheel3_is_k4():
    assert wheel_graph(3) == complete_graph(4)


def test_wheel_hub_is_last():
    W = wheel_graph(5)
    assert W.n == 6 and W.degree(5) == 5 and all(W.degree(i) == 3 for i in range(5))


def test_long_star_shape():
    G = long_star()
    assert G.n == 11 == len(LONG_STAR_LABELS)
    assert G.degree(0) == 5
    assert sorted(G.degree(v) for v in G.vertices) == [1] * 5 + [2] * 5 + [5]
    assert G == star_of_paths(5, 2)


def test_random_families_are_seeded():
    assert random_chordal(8, 7) == random_chordal(8, 7)
    assert erdos_renyi(9, 0.4, 3) == erdos_renyi(9, 0.4, 3)
    assert any(random_chordal(8, 7) != random_chordal(8, s) for s in range(8, 12))


def test_random_chordal_disconnected_mode_can_split():
    assert any(
        random_chordal(6, s, connected=False).m < 5 for s in range(50)
    )


@pytest.mark.parametrize("bad", [lambda: cycle_graph(2), lambda: wheel_graph(2),
                                 lambda: path_graph(-1), lambda: erdos_renyi(3, 1.5, 0)])
def test_generator_argument_checks(bad):
    with pytest.raises(GraphError):
        bad()


def test_generate_graph_dispatch():
    assert generate_graph(GeneratorSpec("path", {"n": 4})) == path_graph(4)
    assert generate_graph(GeneratorSpec("random_chordal", {"n": 6}, 5)) == random_chordal(6, 5)
    assert set(FAMILIES) >= {"path", "cycle", "wheel", "complete", "star_of_paths",
                             "erdos_renyi", "random_chordal"}
    with pytest.raises(GraphError, match="unknown family"):
        generate_graph(GeneratorSpec("petersen", {}))
    with pytest.raises(GraphError, match="needs parameters"):
        generate_graph(GeneratorSpec("cycle", {}))
