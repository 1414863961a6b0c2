"""Two small named graphs used as golden fixtures.

``long_star`` is a centre with five pendant 2-vertex paths: the distance
2-domination number is 1 while five connected pieces of size <= 2 are needed
to dominate it.

``reverse_construction`` is the 13-vertex chordal graph whose 2-independence
complex is ``S^1 v S^3 v S^3``.  Both hub paths ``b - b^1 - b^2 - b^3 - b^4``
are full 5-vertex paths, matching what the synthesiser builds for r=2 with
summands ``1:1, 2:2``.
"""
from __future__ import annotations

from .generators import star_of_paths
from .graph import Graph

LONG_STAR_LABELS = ("v1",) + tuple(f"l{j}{i}" for i in range(1, 6) for j in (1, 2))

FIG2_LABELS = (
    "v1", "v2", "a1", "b1", "b2",
    "b1^1", "b1^2", "b1^3", "b1^4",
    "b2^1", "b2^2", "b2^3", "b2^4",
)


def long_star() -> Graph:
    return star_of_paths(5, 2)


def reverse_construction() -> tuple[Graph, dict[str, int]]:
    """The 13-vertex example graph plus a name -> vertex id map."""
    ix = {name: i for i, name in enumerate(FIG2_LABELS)}
    named = [
        ("v1", "v2"), ("v2", "b1"), ("v2", "a1"), ("v2", "b2"),
        ("b1", "b2"), ("a1", "b2"), ("a1", "b1"),
        ("b1", "b1^1"), ("b1^1", "b1^2"), ("b1^2", "b1^3"), ("b1^3", "b1^4"),
        ("b2", "b2^1"), ("b2^1", "b2^2"), ("b2^2", "b2^3"), ("b2^3", "b2^4"),
    ]
    b1_path = ["b1^1", "b1^2", "b1^3", "b1^4"]
    b2_path = ["b2^1", "b2^2", "b2^3", "b2^4"]
    named += [("a1", x) for x in b1_path + b2_path]
    named += [("b2", x) for x in b1_path]
    named += [("b1", x) for x in b2_path]
    G = Graph(len(FIG2_LABELS), frozenset((ix[a], ix[b]) for a, b in named))
    return G, ix
